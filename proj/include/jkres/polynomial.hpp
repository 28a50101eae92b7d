#pragma once

#include <complex>
#include <map>
#include <vector>

#include "jkres/rational.hpp"

namespace jkres {

// Sparse multivariate polynomial over Rational.  Terms are kept in a
// map ordered by exponent vector, so iteration is deterministic and
// the zero polynomial has an empty term map.
class Polynomial {
public:
    using Exponents = std::vector<int>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int i);
    static Polynomial monomial(int nvars, Exponents e, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    // Coefficient of the given exponent vector (zero if absent).
    Rational coefficient(const Exponents& e) const;
    Rational constant_coefficient() const;

    void add_term(const Exponents& e, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;

    Polynomial derivative(int var) const;

    // Max / min total degree over the support; -1 for the zero polynomial.
    int total_degree() const;
    int lowest_degree() const;
    int degree_in(int var) const;

    Rational eval(const std::vector<Rational>& point) const;
    std::complex<double> eval(const std::vector<std::complex<double>>& point) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    int nvars_;
    std::map<Exponents, Rational> terms_;
};

// P(d/dv_0, ..., d/dv_{n-1}) applied to q: each monomial of p acts as
// the corresponding mixed partial derivative.
Polynomial apply_diff_operator(const Polynomial& p, const Polynomial& q);

} // namespace jkres
