#pragma once

#include <map>
#include <vector>

#include "jkres/arrangement.hpp"
#include "jkres/polynomial.hpp"
#include "jkres/rational_matrix.hpp"
#include "jkres/series.hpp"

namespace jkres {

// P(z) / prod_i form(i)^multiplicity, with P over the standard lattice
// coordinates z_1..z_r.
struct RationalFunction {
    Polynomial numerator;
    std::map<int, int> denominator; // form index -> multiplicity >= 1

    int denominator_degree() const {
        int k = 0;
        for (const auto& [i, m] : denominator) k += m;
        return k;
    }
};

// Throws validation_error on out-of-range form indices, nonpositive
// multiplicities, or a numerator over the wrong variable count.
void validate_function(const Arrangement& arr, const RationalFunction& f);

// The form as a degree-1 polynomial in the standard coordinates.
Polynomial form_polynomial(const Arrangement& arr, int form_index);

// Directional derivative d/dv applied by the quotient rule; every
// denominator multiplicity is raised by one.
RationalFunction directional_derivative(const Arrangement& arr, const RationalFunction& f,
                                        const std::vector<Rational>& v);

template <class T>
T eval_function(const Arrangement& arr, const RationalFunction& f, const std::vector<T>& z) {
    T val = f.numerator.is_zero() ? T{} : f.numerator.eval(z);
    for (const auto& [i, m] : f.denominator) {
        T d{};
        for (int c = 0; c < arr.rank(); ++c)
            d = d + z[c] * ring_traits<T>::from_rational(Rational(arr.form(i).coords[c]));
        for (int p = 0; p < m; ++p) val = val / d;
    }
    return val;
}

// Change of coordinates attached to an ordered basis of forms: the new
// variables are w_j = <basis_j, z>.
struct ObFrame {
    OrderedBasis basis;
    RationalMatrix inverse; // B^{-1}, B rows = basis forms
    mpz_class determinant;  // det B

    // Coefficients of <gamma, z> in the w-coordinates: B^{-T} gamma.
    FormInCoords form_coords(const std::vector<long>& gamma) const;
    FormInCoords form_coords(const std::vector<Rational>& gamma) const;
    // Row i expresses standard z_i as a linear form in w.
    std::vector<std::vector<Rational>> substitution_rows() const;
};

ObFrame ob_frame(const Arrangement& arr, const OrderedBasis& basis);

// One factor of a product to be expanded lazily on a given window.
// min_degree is a lower bound on the factor's total degree, used to
// cap partial products (terms too high to ever reach the target
// degree are dropped during multiplication).
template <class R>
struct ExpandableFactor {
    int min_degree;
    std::function<NestedSeries<R>(const WindowSpec&)> expand;
};

// Coefficient of w_1^{-1} ... w_r^{-1} in the product of the factors.
// Each expanded factor is pruned to the total degree it can contribute
// given the other factors' minimum degrees, and partial products are
// capped the same way.
template <class R>
R residue_from_factors(int rank, const std::vector<ExpandableFactor<R>>& factors,
                       const WindowSpec& win) {
    if (factors.empty()) return ring_traits<R>::zero();
    const int target = -rank;
    const int n = static_cast<int>(factors.size());
    std::vector<int> suffix_min(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) suffix_min[i] = suffix_min[i + 1] + factors[i].min_degree;
    int prefix_min = 0;
    NestedSeries<R> acc(win);
    for (int i = 0; i < n; ++i) {
        int own_cap = target - prefix_min - suffix_min[i + 1];
        NestedSeries<R> part = factors[i].expand(win).pruned_above_degree(own_cap);
        if (i == 0)
            acc = std::move(part);
        else
            acc = acc.multiply(part, target - suffix_min[i + 1]);
        if (acc.empty()) break;
        prefix_min += factors[i].min_degree;
    }
    return acc.coefficient(std::vector<int>(rank, -1));
}

// Factor list of f rewritten in the w-coordinates of the frame:
// inverse powers of the denominator forms, then the numerator (omitted
// when it is the constant 1).
template <class R>
std::vector<ExpandableFactor<R>> function_factors(const Arrangement& arr,
                                                  const RationalFunction& f,
                                                  const ObFrame& frame) {
    std::vector<ExpandableFactor<R>> factors;
    for (const auto& [i, m] : f.denominator) {
        FormInCoords beta = frame.form_coords(arr.form(i).coords);
        int mult = m;
        factors.push_back({-mult, [beta, mult](const WindowSpec& w) {
                               return expand_inverse_form<R>(beta, mult, w);
                           }});
    }
    if (!(f.numerator.is_constant() && f.numerator.constant_coefficient() == Rational(1))) {
        Polynomial num = f.numerator;
        auto rows = frame.substitution_rows();
        factors.push_back({std::max(0, num.lowest_degree()), [num, rows](const WindowSpec& w) {
                               return expand_polynomial<R>(num, rows, w);
                           }});
    }
    return factors;
}

// Residue at the origin along the ordered basis: rewrite f in the
// w-coordinates and take iterated one-variable residues, innermost
// variable last in the basis order.
Rational iterated_residue(const Arrangement& arr, const OrderedBasis& basis,
                          const RationalFunction& f, int window_scale = 1);

// Element of the span of the basis simple fractions, written on the
// diagonal basis: index set -> coefficient.
using SimpleElement = std::map<BasisSet, Rational>;

SimpleElement jk_residue(const Arrangement& arr, const RationalFunction& f,
                         const DiagonalBasis& basis, int window_scale = 1);

struct BasisFractionTerm {
    Rational coefficient;
    std::map<int, int> multiplicities; // support is linearly independent
};

// Rewrites 1 / prod form^mult as a sum of fractions whose denominator
// supports are independent, by repeatedly eliminating the smallest
// member of a dependent circuit.
std::vector<BasisFractionTerm> decompose_to_basis_fractions(const Arrangement& arr,
                                                            const std::map<int, int>& denominator);

} // namespace jkres
