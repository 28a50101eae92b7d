#pragma once

#include <complex>
#include <vector>

#include "jkres/arrangement.hpp"
#include "jkres/residues.hpp"

namespace jkres {

struct TruncatedSum {
    std::complex<double> value;
    long radius;
    double tail_bound; // conservative bound on the omitted terms
};

// Brute-force sum of e^{<t, z + 2*pi*i*n>} f(z + 2*pi*i*n) over integer
// vectors n with |n_j| <= radius, skipping n where some denominator
// form of f vanishes on z + 2*pi*i*n.  Terms are accumulated in
// lexicographic n order with compensated (Kahan) summation, so the
// result is deterministic.  The phase e^{2*pi*i*<t,n>} is computed from
// the exact rational <t,n> reduced mod 1.
TruncatedSum lattice_sum(const Arrangement& arr, const RationalFunction& f,
                         const std::vector<Rational>& t,
                         const std::vector<std::complex<double>>& z, long radius);

} // namespace jkres
