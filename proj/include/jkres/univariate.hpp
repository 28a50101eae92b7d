#pragma once

#include <complex>
#include <vector>

#include "jkres/rational.hpp"

namespace jkres {

// Dense univariate polynomial over Rational, trailing zeros stripped.
class Poly1 {
public:
    Poly1() = default;
    explicit Poly1(std::vector<Rational> c) : c_(std::move(c)) { normalize(); }
    static Poly1 constant(const Rational& q) { return Poly1({q}); }
    static Poly1 x() { return Poly1({Rational(0), Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0);
    }
    Rational leading() const;

    Poly1 operator-() const;
    friend Poly1 operator+(const Poly1& a, const Poly1& b);
    friend Poly1 operator-(const Poly1& a, const Poly1& b);
    friend Poly1 operator*(const Poly1& a, const Poly1& b);
    Poly1 scaled(const Rational& q) const;
    Poly1 derivative() const;

    // Quotient and remainder of exact polynomial division.
    static std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b);

    template <class T>
    T eval(const T& x) const {
        T acc{};
        for (int i = degree(); i >= 0; --i)
            acc = acc * x + ring_cast<T>(c_[i]);
        return acc;
    }

    friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

private:
    template <class T>
    static T ring_cast(const Rational& q);

    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

template <>
inline Rational Poly1::ring_cast<Rational>(const Rational& q) { return q; }
template <>
inline std::complex<double> Poly1::ring_cast<std::complex<double>>(const Rational& q) {
    return to_complex(q);
}

Poly1 gcd(Poly1 a, Poly1 b);

// Reduced fraction of univariate polynomials with monic denominator.
class RatFun1 {
public:
    RatFun1() : num_(), den_(Poly1::constant(Rational(1))) {}
    RatFun1(Poly1 num, Poly1 den);

    const Poly1& num() const { return num_; }
    const Poly1& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFun1 operator-() const;
    friend RatFun1 operator+(const RatFun1& a, const RatFun1& b);
    friend RatFun1 operator-(const RatFun1& a, const RatFun1& b);
    friend RatFun1 operator*(const RatFun1& a, const RatFun1& b);
    RatFun1 scaled(const Rational& q) const;

    // d/dx as a rational function.
    RatFun1 derivative() const;

    template <class T>
    T eval(const T& x) const {
        return num_.eval(x) / den_.eval(x);
    }

    friend bool operator==(const RatFun1& a, const RatFun1& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun1& a, const RatFun1& b) { return !(a == b); }

private:
    Poly1 num_, den_;
};

} // namespace jkres
