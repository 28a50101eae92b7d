#pragma once

#include <algorithm>
#include <climits>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "jkres/bernoulli.hpp"
#include "jkres/errors.hpp"
#include "jkres/polynomial.hpp"
#include "jkres/rational.hpp"

namespace jkres {

// Exponent window [lo, hi] for one series variable.
struct VarWindow {
    int lo;
    int hi;

    friend bool operator==(const VarWindow& a, const VarWindow& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

class WindowSpec {
public:
    WindowSpec(int rank, VarWindow uniform) : vars_(rank, uniform) { check(); }
    explicit WindowSpec(std::vector<VarWindow> vars) : vars_(std::move(vars)) { check(); }

    int rank() const { return static_cast<int>(vars_.size()); }
    const VarWindow& var(int j) const { return vars_[j]; }

    WindowSpec scaled(int s) const {
        std::vector<VarWindow> v = vars_;
        for (auto& w : v) {
            w.lo *= s;
            w.hi *= s;
        }
        return WindowSpec(v);
    }

    // Per-variable intersection.
    static WindowSpec intersect(const WindowSpec& a, const WindowSpec& b);

    friend bool operator==(const WindowSpec& a, const WindowSpec& b) {
        return a.vars_ == b.vars_;
    }

private:
    void check() const {
        if (vars_.empty()) throw precondition_error("window with no variables");
        for (const auto& w : vars_)
            if (w.lo > w.hi) throw precondition_error("empty window range");
    }

    std::vector<VarWindow> vars_;
};

inline WindowSpec WindowSpec::intersect(const WindowSpec& a, const WindowSpec& b) {
    if (a.rank() != b.rank()) throw precondition_error("window rank mismatch");
    std::vector<VarWindow> v;
    v.reserve(a.rank());
    for (int j = 0; j < a.rank(); ++j)
        v.push_back({std::max(a.var(j).lo, b.var(j).lo), std::min(a.var(j).hi, b.var(j).hi)});
    return WindowSpec(v);
}

// Coefficient-ring plug for NestedSeries.  Rings must supply exact
// zero tests so truncated products stay sparse.
template <class R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static Rational zero() { return {}; }
    static Rational one() { return Rational(1); }
    static Rational from_rational(const Rational& q) { return q; }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static bool equal(const Rational& a, const Rational& b) { return a == b; }
};

template <>
struct ring_traits<Polynomial> {
    static Polynomial zero() { return {}; }
    static Polynomial one() { return Polynomial::constant(0, Rational(1)); }
    static Polynomial from_rational(const Rational& q) {
        return q.is_zero() ? Polynomial() : Polynomial::constant(0, q);
    }
    static bool is_zero(const Polynomial& x) { return x.is_zero(); }
    static bool equal(const Polynomial& a, const Polynomial& b) { return a == b; }
};

template <>
struct ring_traits<std::complex<double>> {
    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static std::complex<double> from_rational(const Rational& q) { return to_complex(q); }
    static bool is_zero(const std::complex<double>& x) { return x == std::complex<double>(); }
    static bool equal(const std::complex<double>& a, const std::complex<double>& b) {
        return a == b;
    }
};

// Truncated multivariate Laurent series over R: a sparse map from
// exponent vectors inside a window to coefficients.  Keys are packed
// into int64 so that key order equals lexicographic exponent order,
// making iteration and arithmetic fully deterministic.
template <class R>
class NestedSeries {
public:
    using traits = ring_traits<R>;

    explicit NestedSeries(const WindowSpec& win) : win_(win) {
        stride_.assign(win.rank(), 1);
        long long cells = 1;
        for (int j = win.rank() - 1; j >= 0; --j) {
            stride_[j] = cells;
            long long size = static_cast<long long>(win.var(j).hi) - win.var(j).lo + 1;
            if (size > 0 && cells > (INT64_MAX / 4) / size)
                throw precondition_error("window too large to index");
            cells *= size;
        }
    }

    static NestedSeries one(const WindowSpec& win) {
        NestedSeries s(win);
        s.add_term(std::vector<int>(win.rank(), 0), traits::one());
        return s;
    }

    int rank() const { return win_.rank(); }
    const WindowSpec& window() const { return win_; }
    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool in_window(const std::vector<int>& e) const {
        for (int j = 0; j < rank(); ++j)
            if (e[j] < win_.var(j).lo || e[j] > win_.var(j).hi) return false;
        return true;
    }

    // Terms outside the window are dropped: that is the truncation
    // semantics, guarded upstream by window-doubling checks.
    void add_term(const std::vector<int>& e, const R& c) {
        if (traits::is_zero(c)) return;
        if (!in_window(e)) return;
        auto [it, fresh] = terms_.try_emplace(encode(e), c);
        if (!fresh) {
            it->second = it->second + c;
            if (traits::is_zero(it->second)) terms_.erase(it);
        }
    }

    R coefficient(const std::vector<int>& e) const {
        if (!in_window(e)) return traits::zero();
        auto it = terms_.find(encode(e));
        return it == terms_.end() ? traits::zero() : it->second;
    }

    NestedSeries plus(const NestedSeries& o) const {
        NestedSeries out(WindowSpec::intersect(win_, o.win_));
        for_each([&](const std::vector<int>& e, const R& c) { out.add_term(e, c); });
        o.for_each([&](const std::vector<int>& e, const R& c) { out.add_term(e, c); });
        return out;
    }

    // Truncated product; terms whose total degree exceeds
    // max_total_degree are discarded (they cannot reach the target
    // degree once the remaining factors' minimum degrees are counted).
    NestedSeries multiply(const NestedSeries& o, int max_total_degree = INT_MAX) const {
        NestedSeries out(WindowSpec::intersect(win_, o.win_));
        std::vector<std::pair<std::vector<int>, const R*>> a, b;
        a.reserve(terms_.size());
        b.reserve(o.terms_.size());
        for (const auto& [k, c] : terms_) a.emplace_back(decode(k), &c);
        for (const auto& [k, c] : o.terms_) b.emplace_back(o.decode(k), &c);
        std::vector<int> e(rank());
        for (const auto& [ea, ca] : a) {
            int da = total_of(ea);
            for (const auto& [eb, cb] : b) {
                if (max_total_degree != INT_MAX && da + total_of(eb) > max_total_degree)
                    continue;
                for (int j = 0; j < rank(); ++j) e[j] = ea[j] + eb[j];
                out.add_term(e, (*ca) * (*cb));
            }
        }
        return out;
    }

    NestedSeries scaled(const Rational& q) const { return scaled_ring(traits::from_rational(q)); }

    NestedSeries scaled_ring(const R& c) const {
        NestedSeries out(win_);
        if (traits::is_zero(c)) return out;
        for (const auto& [k, v] : terms_) {
            R w = v * c;
            if (!traits::is_zero(w)) out.terms_.emplace(k, std::move(w));
        }
        return out;
    }

    // Adds delta to the exponent of variable j in every term.
    NestedSeries shifted(int j, int delta) const {
        NestedSeries out(win_);
        for_each([&](const std::vector<int>& e, const R& c) {
            std::vector<int> f = e;
            f[j] += delta;
            out.add_term(f, c);
        });
        return out;
    }

    NestedSeries pruned_above_degree(int max_total_degree) const {
        NestedSeries out(win_);
        for_each([&](const std::vector<int>& e, const R& c) {
            if (total_of(e) <= max_total_degree) out.add_term(e, c);
        });
        return out;
    }

    int min_total_degree() const {
        int best = INT_MAX;
        for_each([&](const std::vector<int>& e, const R&) {
            best = std::min(best, total_of(e));
        });
        return best;
    }

    template <class F>
    void for_each(F&& f) const {
        for (const auto& [k, c] : terms_) f(decode(k), c);
    }

    // Semantic equality: same nonzero coefficients on the window
    // intersection and nothing outside it.
    friend bool operator==(const NestedSeries& x, const NestedSeries& y) {
        auto collect = [](const NestedSeries& s) {
            std::map<std::vector<int>, R> m;
            s.for_each([&](const std::vector<int>& e, const R& c) { m.emplace(e, c); });
            return m;
        };
        auto mx = collect(x), my = collect(y);
        if (mx.size() != my.size()) return false;
        auto it = my.begin();
        for (const auto& [e, c] : mx) {
            if (it->first != e || !traits::equal(it->second, c)) return false;
            ++it;
        }
        return true;
    }

private:
    static int total_of(const std::vector<int>& e) {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }

    long long encode(const std::vector<int>& e) const {
        long long k = 0;
        for (int j = 0; j < rank(); ++j)
            k += stride_[j] * (static_cast<long long>(e[j]) - win_.var(j).lo);
        return k;
    }

    std::vector<int> decode(long long k) const {
        std::vector<int> e(rank());
        for (int j = 0; j < rank(); ++j) {
            long long size = static_cast<long long>(win_.var(j).hi) - win_.var(j).lo + 1;
            long long q = (k / stride_[j]) % size;
            e[j] = static_cast<int>(q) + win_.var(j).lo;
        }
        return e;
    }

    WindowSpec win_;
    std::vector<long long> stride_;
    std::map<long long, R> terms_;
};

// A linear form written in the series coordinates: <beta, z> =
// sum_j coeffs[j] z_j.
struct FormInCoords {
    std::vector<Rational> coeffs;

    // Index of the first nonzero coefficient; -1 if all vanish.
    int lead() const {
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            if (!coeffs[j].is_zero()) return static_cast<int>(j);
        return -1;
    }
};

// Degree-1 series sum_j coeffs[j] z_j over ring R.
template <class R>
NestedSeries<R> linear_series(const std::vector<R>& coeffs, const WindowSpec& win) {
    NestedSeries<R> s(win);
    std::vector<int> e(win.rank(), 0);
    for (int j = 0; j < win.rank(); ++j) {
        e[j] = 1;
        s.add_term(e, coeffs[j]);
        e[j] = 0;
    }
    return s;
}

template <class R>
std::vector<R> lift_rational_coeffs(const std::vector<Rational>& coeffs) {
    std::vector<R> out;
    out.reserve(coeffs.size());
    for (const auto& q : coeffs) out.push_back(ring_traits<R>::from_rational(q));
    return out;
}

// Largest power of a degree-1 series that can still contribute a term
// inside the window.
inline int max_useful_order(const WindowSpec& win) {
    int k = 0;
    for (int j = 0; j < win.rank(); ++j) k += std::max(0, win.var(j).hi);
    return k;
}

// Iterated-Laurent expansion of <beta, z>^(-power) about the lead
// variable of beta: with <beta,z> = c z_L + rest (rest only involving
// later variables),
//   <beta,z>^(-p) = sum_{k>=0} binom(p+k-1,k) (-1)^k c^(-p-k) rest^k z_L^(-p-k).
template <class R>
NestedSeries<R> expand_inverse_form(const FormInCoords& beta, int power,
                                    const WindowSpec& win) {
    if (power < 1) throw precondition_error("inverse form needs power >= 1");
    int L = beta.lead();
    if (L < 0) throw precondition_error("inverse of the zero form");
    if (-power < win.var(L).lo)
        throw window_overflow("pole order " + std::to_string(power) +
                              " exceeds window floor of variable " + std::to_string(L));
    const Rational inv_c = beta.coeffs[L].inverse();

    std::vector<R> rest_coeffs(win.rank(), ring_traits<R>::zero());
    for (int j = L + 1; j < win.rank(); ++j)
        rest_coeffs[j] = ring_traits<R>::from_rational(beta.coeffs[j]);
    NestedSeries<R> rest = linear_series(rest_coeffs, win);

    int max_k = -win.var(L).lo - power; // deepest reachable z_L exponent
    max_k = std::min(max_k, max_useful_order(win));

    NestedSeries<R> acc(win);
    NestedSeries<R> restpow = NestedSeries<R>::one(win);
    Rational c_pow = inv_c.pow(power);
    for (int k = 0; k <= max_k; ++k) {
        Rational s = binomial_rational(power + k - 1, k) * c_pow;
        if (k % 2 == 1) s = -s;
        acc = acc.plus(restpow.scaled(s).shifted(L, -(power + k)));
        if (k < max_k) {
            restpow = restpow.multiply(rest);
            if (restpow.empty()) break;
        }
        c_pow *= inv_c;
    }
    return acc;
}

// exp(sum_j coeffs[j] z_j), truncated to the window and optionally to
// a maximum total order (when the caller knows higher orders cannot
// contribute to the coefficient it is after).
template <class R>
NestedSeries<R> expand_exponential(const std::vector<R>& coeffs, const WindowSpec& win,
                                   int max_order = INT_MAX) {
    NestedSeries<R> lin = linear_series(coeffs, win);
    NestedSeries<R> acc = NestedSeries<R>::one(win);
    NestedSeries<R> pow = NestedSeries<R>::one(win);
    int K = std::min(max_useful_order(win), max_order);
    Rational kfact(1);
    for (int k = 1; k <= K; ++k) {
        pow = pow.multiply(lin, K);
        if (pow.empty()) break;
        kfact *= Rational(k);
        acc = acc.plus(pow.scaled(kfact.inverse()));
    }
    return acc;
}

// sum_k u[k] <beta, z>^k for a univariate coefficient sequence u.
// u must cover at least max_useful_order(win) + 1 entries for the
// truncation to be exact on the window.
template <class R>
NestedSeries<R> compose_univariate(const std::vector<R>& u, const FormInCoords& beta,
                                   const WindowSpec& win) {
    NestedSeries<R> lin =
        linear_series(lift_rational_coeffs<R>(beta.coeffs), win);
    NestedSeries<R> acc(win);
    if (!u.empty()) {
        acc = NestedSeries<R>::one(win).scaled_ring(u[0]);
        NestedSeries<R> pow = NestedSeries<R>::one(win);
        for (std::size_t k = 1; k < u.size(); ++k) {
            pow = pow.multiply(lin);
            if (pow.empty()) break;
            acc = acc.plus(pow.scaled_ring(u[k]));
        }
    }
    return acc;
}

// Todd-type factor 1/(1 - e^{-w}) for sign = -1, or 1/(1 - e^{w}) for
// sign = +1, with w = <beta, z>.  Both have a simple pole along w:
//   1/(1 - e^{-w}) = (1/w) sum_n (-1)^n B_n w^n / n!
//   1/(1 - e^{+w}) = -(1/w) sum_n B_n w^n / n!
template <class R>
NestedSeries<R> expand_todd(const FormInCoords& beta, int sign, const WindowSpec& win) {
    if (sign != 1 && sign != -1) throw precondition_error("todd sign must be +-1");
    int K = max_useful_order(win) + 1;
    std::vector<R> u;
    u.reserve(K + 1);
    Rational nfact(1);
    for (int n = 0; n <= K; ++n) {
        if (n > 0) nfact *= Rational(n);
        Rational c = bernoulli(n) / nfact;
        if (sign == -1 && n % 2 == 1) c = -c;
        if (sign == +1) c = -c;
        u.push_back(ring_traits<R>::from_rational(c));
    }
    NestedSeries<R> holo = compose_univariate(u, beta, win);
    return expand_inverse_form<R>(beta, 1, win).multiply(holo);
}

// Polynomial in auxiliary variables Z_i, each substituted by the
// linear form sum_j subst[i][j] z_j.
template <class R>
NestedSeries<R> expand_polynomial(const Polynomial& p,
                                  const std::vector<std::vector<Rational>>& subst,
                                  const WindowSpec& win) {
    NestedSeries<R> acc(win);
    if (p.is_zero()) return acc;
    if (p.nvars() > static_cast<int>(subst.size()))
        throw precondition_error("substitution rows do not cover all variables");
    std::vector<NestedSeries<R>> lin;
    lin.reserve(p.nvars());
    for (int i = 0; i < p.nvars(); ++i)
        lin.push_back(linear_series(lift_rational_coeffs<R>(subst[i]), win));
    for (const auto& [e, c] : p.terms()) {
        NestedSeries<R> term = NestedSeries<R>::one(win).scaled(c);
        for (int i = 0; i < p.nvars(); ++i)
            for (int m = 0; m < e[i]; ++m) term = term.multiply(lin[i]);
        acc = acc.plus(term);
    }
    return acc;
}

} // namespace jkres
