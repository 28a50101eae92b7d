#include "jkres/polynomial.hpp"

#include <algorithm>

#include "jkres/errors.hpp"

namespace jkres {

namespace {

// Zero-variable constants act as scalars: lift exponent vectors to the
// wider variable count before combining.
int common_nvars(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() == b.nvars()) return a.nvars();
    if (a.nvars() == 0 || b.nvars() == 0) return std::max(a.nvars(), b.nvars());
    throw precondition_error("polynomial variable count mismatch");
}

std::vector<int> lifted(const std::vector<int>& e, int nvars) {
    if (static_cast<int>(e.size()) == nvars) return e;
    std::vector<int> f(nvars, 0);
    std::copy(e.begin(), e.end(), f.begin());
    return f;
}

} // namespace

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw precondition_error("variable index out of range");
    Exponents e(nvars, 0);
    e[i] = 1;
    return monomial(nvars, e, Rational(1));
}

Polynomial Polynomial::monomial(int nvars, Exponents e, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(e, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](int e) { return e == 0; }));
}

Rational Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_coefficient() const { return coefficient(Exponents(nvars_, 0)); }

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw precondition_error("exponent vector length mismatch");
    for (int x : e)
        if (x < 0) throw precondition_error("negative exponent in polynomial");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial p(nvars_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    int nv = common_nvars(*this, o);
    if (nv != nvars_) {
        Polynomial wide(nv);
        for (const auto& [e, c] : terms_) wide.add_term(lifted(e, nv), c);
        *this = std::move(wide);
    }
    for (const auto& [e, c] : o.terms_) add_term(lifted(e, nv), c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    int nv = common_nvars(a, b);
    Polynomial p(nv);
    Polynomial::Exponents e(nv);
    for (const auto& [ea, ca] : a.terms_) {
        auto la = lifted(ea, nv);
        for (const auto& [eb, cb] : b.terms_) {
            auto lb = lifted(eb, nv);
            for (int j = 0; j < nv; ++j) e[j] = la[j] + lb[j];
            p.add_term(e, ca * cb);
        }
    }
    return p;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial p(nvars_);
    if (c.is_zero()) return p;
    for (const auto& [e, v] : terms_) p.terms_.emplace(e, v * c);
    return p;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw precondition_error("derivative variable out of range");
    Polynomial p(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents f = e;
        f[var] -= 1;
        p.add_term(f, c * Rational(e[var]));
    }
    return p;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

int Polynomial::lowest_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = d < 0 ? s : std::min(d, s);
    }
    return d;
}

int Polynomial::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
    Rational acc;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int j = 0; j < nvars_; ++j)
            if (e[j] != 0) t *= point[j].pow(e[j]);
        acc += t;
    }
    return acc;
}

std::complex<double> Polynomial::eval(const std::vector<std::complex<double>>& point) const {
    std::complex<double> acc;
    for (const auto& [e, c] : terms_) {
        std::complex<double> t = to_complex(c);
        for (int j = 0; j < nvars_; ++j)
            for (int p = 0; p < e[j]; ++p) t *= point[j];
        acc += t;
    }
    return acc;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    int nv = a.nvars() == b.nvars() ? a.nvars() : std::max(a.nvars(), b.nvars());
    if (a.nvars() != b.nvars() && a.nvars() != 0 && b.nvars() != 0) return false;
    std::map<Polynomial::Exponents, Rational> ta, tb;
    for (const auto& [e, c] : a.terms_) ta.emplace(lifted(e, nv), c);
    for (const auto& [e, c] : b.terms_) tb.emplace(lifted(e, nv), c);
    return ta == tb;
}

Polynomial apply_diff_operator(const Polynomial& p, const Polynomial& q) {
    Polynomial out(q.nvars());
    for (const auto& [e, c] : p.terms()) {
        Polynomial d = q;
        for (int j = 0; j < p.nvars() && !d.is_zero(); ++j)
            for (int k = 0; k < e[j]; ++k) d = d.derivative(j);
        out += d.scaled(c);
    }
    return out;
}

} // namespace jkres
