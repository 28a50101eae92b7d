#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "jkres/arrangement.hpp"
#include "jkres/polynomial.hpp"
#include "jkres/residues.hpp"
#include "jkres/univariate.hpp"

namespace jkres {

// The basis-indexed summand of the periodic kernel attached to an
// alcove point: (1/index) * sum_u e^{<u,z>} / prod_{j in sigma} (1 - e^{-<form_j, z>}).
struct AlcoveKernel {
    BasisSet sigma;
    mpz_class index;
    std::vector<std::vector<long>> numerator_exponents; // box representatives
};

AlcoveKernel alcove_kernel(const Arrangement& arr, const BasisSet& sigma,
                           const std::vector<Rational>& t);

struct ConstantTerm {
    Polynomial polynomial;               // in t_1..t_r
    std::vector<Rational> alcove_witness;
    int degree_bound;
    VarWindow base_window;               // per-variable window before scaling
    int window_scale_used;               // scale at which doubling stabilized
};

// Sum over the diagonal basis of iterated residues of
// e^{<t,z>} f(z) K_sigma(-z), computed with polynomial-in-t
// coefficients.  The series window is doubled until two consecutive
// results agree; stability_error after two doublings.
ConstantTerm constant_term(const Arrangement& arr, const RationalFunction& f,
                           const std::vector<Rational>& t, int window_scale = 1,
                           const DiagonalBasis* basis = nullptr);

// Exact multiple of a power of 2*pi*i.
struct PiPower {
    Rational coefficient;
    long two_i_pi_exponent;
};

// Real form coefficient * (2*pi)^k when the exponent k is even:
// (2*pi*i)^k = (-1)^(k/2) (2*pi)^k.
std::optional<Rational> two_pi_real_coefficient(const PiPower& v);

struct NormalizedSumResult {
    PiPower value;       // coefficient * (2*pi*i)^k, k = total multiplicity
    ConstantTerm ct;
    bool limit_zero;
};

// The renormalized lattice sum sum'_n e^{2*pi*i*<t,n>} / prod <form_j, n>^{m_j}
// as an exact multiple of (2*pi*i)^k.  With limit_zero the polynomial
// is evaluated at t = 0 (valid when the total multiplicity is at least
// rank+1); the alcove witness is then chosen deterministically.
NormalizedSumResult normalized_sum(const Arrangement& arr,
                                   const std::map<int, int>& multiplicities,
                                   const std::optional<std::vector<Rational>>& t,
                                   bool limit_zero, int window_scale = 1);

// Closed form of the rank-1 kernel E_k(t, z) for k <= -1:
// E_k = e^{floor(t) z} * sum_i t_coeffs[i](e^z) * t^i, with
// E_{-1} = e^{floor(t) z} x/(x-1), x = e^z, and the downward recursion
// E_{k-1} = (dE_k/dz - t E_k) / k.
struct OneDKernel {
    long k;
    mpz_class floor_t;
    std::vector<RatFun1> t_coeffs; // size -k, coefficient of t^i in x = e^z

    std::complex<double> eval(const Rational& t, std::complex<double> z) const;
};

OneDKernel one_d_eisenstein(long k, const Rational& t);

// Numeric value of sum over the diagonal basis of iterated residues of
// e^{<t,z>} f(z) K_sigma(y - z) at a point y with <form, y> not in
// 2*pi*i*Z for any form.
std::complex<double> kernel_eval(const Arrangement& arr, const RationalFunction& f,
                                 const std::vector<Rational>& t,
                                 const std::vector<std::complex<double>>& y,
                                 int window_scale = 1);

// Deterministic regular point near 0 used for limit evaluations:
// epsilon * (1/(1+a), ..., 1/(r+a)) for the first a = 0, 1, ... that
// is regular, epsilon = 1/1000.
std::vector<Rational> default_alcove_witness(const Arrangement& arr);

} // namespace jkres
