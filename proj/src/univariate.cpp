#include "jkres/univariate.hpp"

#include "jkres/errors.hpp"

namespace jkres {

Rational Poly1::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Poly1 Poly1::operator-() const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return Poly1(std::move(c));
}

Poly1 operator+(const Poly1& a, const Poly1& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Poly1(std::move(c));
}

Poly1 operator-(const Poly1& a, const Poly1& b) { return a + (-b); }

Poly1 operator*(const Poly1& a, const Poly1& b) {
    if (a.is_zero() || b.is_zero()) return Poly1();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly1(std::move(c));
}

Poly1 Poly1::scaled(const Rational& q) const {
    if (q.is_zero()) return Poly1();
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * q;
    return Poly1(std::move(c));
}

Poly1 Poly1::derivative() const {
    if (c_.size() <= 1) return Poly1();
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly1(std::move(c));
}

std::pair<Poly1, Poly1> Poly1::divmod(const Poly1& a, const Poly1& b) {
    if (b.is_zero()) throw precondition_error("polynomial division by zero");
    Poly1 rem = a;
    std::vector<Rational> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
    const Rational lead_inv = b.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rational f = rem.leading() * lead_inv;
        q[shift] = f;
        std::vector<Rational> sub(shift + b.c_.size());
        for (std::size_t i = 0; i < b.c_.size(); ++i) sub[shift + i] = b.c_[i] * f;
        rem = rem - Poly1(std::move(sub));
    }
    return {Poly1(std::move(q)), rem};
}

Poly1 gcd(Poly1 a, Poly1 b) {
    while (!b.is_zero()) {
        Poly1 r = Poly1::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(a.leading().inverse());
}

RatFun1::RatFun1(Poly1 num, Poly1 den) {
    if (den.is_zero()) throw precondition_error("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly1();
        den_ = Poly1::constant(Rational(1));
        return;
    }
    Poly1 g = gcd(num, den);
    if (g.degree() > 0) {
        num = Poly1::divmod(num, g).first;
        den = Poly1::divmod(den, g).first;
    }
    Rational lead_inv = den.leading().inverse();
    num_ = num.scaled(lead_inv);
    den_ = den.scaled(lead_inv);
}

RatFun1 RatFun1::operator-() const {
    RatFun1 out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

RatFun1 operator+(const RatFun1& a, const RatFun1& b) {
    return RatFun1(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun1 operator-(const RatFun1& a, const RatFun1& b) { return a + (-b); }

RatFun1 operator*(const RatFun1& a, const RatFun1& b) {
    return RatFun1(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun1 RatFun1::scaled(const Rational& q) const {
    RatFun1 out;
    out.num_ = num_.scaled(q);
    out.den_ = q.is_zero() ? Poly1::constant(Rational(1)) : den_;
    return out;
}

RatFun1 RatFun1::derivative() const {
    return RatFun1(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

} // namespace jkres
