#include "jkres/eisenstein.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "jkres/bernoulli.hpp"

namespace jkres {

namespace {

std::string normal_str(const std::vector<long>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

void require_regular(const std::vector<Rational>& t, const Arrangement& arr) {
    if (static_cast<int>(t.size()) != arr.rank())
        throw validation_error("t", "point length differs from rank");
    if (auto w = violated_wall(t, arr))
        throw precondition_error("point lies on a wall with normal " + normal_str(*w));
}

void check_basis_indices(const Arrangement& arr, const BasisSet& sigma) {
    if (static_cast<int>(sigma.size()) != arr.rank())
        throw validation_error("basis", "index set size differs from rank");
    for (int i : sigma)
        if (i < 0 || i >= arr.size())
            throw validation_error("basis", "form index " + std::to_string(i) + " out of range");
}

// Factors of the kernel attached to one diagonal-basis member,
// evaluated at -z and written in the member's own w-coordinates:
// r reflected Todd denominators and the box-representative numerator.
template <class R>
void append_kernel_factors(std::vector<ExpandableFactor<R>>& factors, const ObFrame& frame,
                           const BoxReps& box, int holo_cap) {
    const int r = frame.inverse.rows();
    for (int j = 0; j < r; ++j) {
        FormInCoords unit;
        unit.coeffs.assign(r, Rational(0));
        unit.coeffs[j] = Rational(1);
        factors.push_back({-1, [unit](const WindowSpec& w) {
                               return expand_todd<R>(unit, +1, w);
                           }});
    }
    std::vector<std::vector<R>> exps;
    exps.reserve(box.representatives.size());
    for (const auto& u : box.representatives) {
        FormInCoords uc = frame.form_coords(u);
        std::vector<R> coeffs(r);
        for (int j = 0; j < r; ++j) coeffs[j] = ring_traits<R>::from_rational(-uc.coeffs[j]);
        exps.push_back(std::move(coeffs));
    }
    Rational inv_index(mpz_class(1), box.index);
    factors.push_back({0, [exps, inv_index, holo_cap](const WindowSpec& w) {
                           NestedSeries<R> acc(w);
                           for (const auto& coeffs : exps)
                               acc = acc.plus(expand_exponential<R>(coeffs, w, holo_cap));
                           return acc.scaled(inv_index);
                       }});
}

Polynomial ct_once(const Arrangement& arr, const RationalFunction& f,
                   const std::vector<Rational>& t, const DiagonalBasis& basis,
                   const WindowSpec& win) {
    const int r = arr.rank();
    const int holo_cap = f.denominator_degree();
    Polynomial total(r);
    for (const auto& ob : basis.members) {
        ObFrame frame = ob_frame(arr, ob);
        BoxReps box = floor_and_box_reps(t, arr, ob);
        auto factors = function_factors<Polynomial>(arr, f, frame);
        append_kernel_factors<Polynomial>(factors, frame, box, holo_cap);

        // e^{<t,z>} with t symbolic: the w_j coefficient is the degree-1
        // polynomial sum_i t_i B^{-1}[i][j].
        std::vector<Polynomial> tc(r);
        for (int j = 0; j < r; ++j) {
            Polynomial c(r);
            for (int i = 0; i < r; ++i)
                c += Polynomial::variable(r, i).scaled(frame.inverse.at(i, j));
            tc[j] = std::move(c);
        }
        factors.push_back({0, [tc, holo_cap](const WindowSpec& w) {
                               return expand_exponential<Polynomial>(tc, w, holo_cap);
                           }});

        total += residue_from_factors<Polynomial>(r, factors, win);
    }
    return total;
}

} // namespace

AlcoveKernel alcove_kernel(const Arrangement& arr, const BasisSet& sigma,
                           const std::vector<Rational>& t) {
    check_basis_indices(arr, sigma);
    if (static_cast<int>(t.size()) != arr.rank())
        throw validation_error("t", "point length differs from rank");
    BoxReps box = floor_and_box_reps(t, arr, sigma);
    return {sigma, box.index, box.representatives};
}

ConstantTerm constant_term(const Arrangement& arr, const RationalFunction& f,
                           const std::vector<Rational>& t, int window_scale,
                           const DiagonalBasis* basis) {
    validate_function(arr, f);
    require_regular(t, arr);
    if (window_scale < 1) throw validation_error("window-scale", "window scale must be >= 1");
    const int r = arr.rank();
    if (f.numerator.is_zero())
        return {Polynomial(r), t, 0, VarWindow{0, 0}, window_scale};

    DiagonalBasis local;
    if (!basis) {
        local = diagonal_basis(arr);
        basis = &local;
    }

    // On an alcove the result is a polynomial in t whose degree cannot
    // exceed the homogeneity degree -d of f: the symbolic exponential
    // can only spend what the poles provide.
    const int k = f.denominator_degree();
    const int d = std::max(0, f.numerator.total_degree());
    const int degree_bound = std::max(0, k - f.numerator.lowest_degree());
    VarWindow base{-(k + r), (k + r) + d + degree_bound + 2};

    auto compute = [&](int s) {
        return ct_once(arr, f, t, *basis, WindowSpec(r, base).scaled(s));
    };
    Polynomial p1 = compute(window_scale);
    Polynomial p2 = compute(2 * window_scale);
    Polynomial result;
    int used = window_scale;
    if (p1 == p2) {
        result = std::move(p1);
    } else {
        Polynomial p3 = compute(4 * window_scale);
        if (p2 != p3)
            throw stability_error("constant term still changing after two window doublings");
        result = std::move(p2);
        used = 2 * window_scale;
    }
    if (result.total_degree() > degree_bound)
        throw verification_error("constant term exceeds its degree bound");
    return {std::move(result), t, degree_bound, base, used};
}

std::optional<Rational> two_pi_real_coefficient(const PiPower& v) {
    if (v.two_i_pi_exponent % 2 != 0) return std::nullopt;
    Rational c = v.coefficient;
    if ((v.two_i_pi_exponent / 2) % 2 != 0) c = -c;
    return c;
}

std::vector<Rational> default_alcove_witness(const Arrangement& arr) {
    const Rational eps(1, 1000);
    for (long a = 0; a < 100000; ++a) {
        std::vector<Rational> t(arr.rank());
        for (int j = 0; j < arr.rank(); ++j) t[j] = eps / Rational(j + 1 + a);
        if (is_alcove_regular(t, arr)) return t;
    }
    throw precondition_error("no regular point found near the origin");
}

NormalizedSumResult normalized_sum(const Arrangement& arr,
                                   const std::map<int, int>& multiplicities,
                                   const std::optional<std::vector<Rational>>& t,
                                   bool limit_zero, int window_scale) {
    RationalFunction f;
    f.numerator = Polynomial::constant(arr.rank(), Rational(1));
    f.denominator = multiplicities;
    validate_function(arr, f);
    if (multiplicities.empty())
        throw validation_error("denominator", "at least one form is required");

    const int k = f.denominator_degree();
    if (k < arr.rank() + 1)
        throw precondition_error("total multiplicity " + std::to_string(k) +
                                 " is below rank+1; the lattice sum does not converge");

    std::vector<Rational> witness;
    std::vector<Rational> eval_at;
    if (limit_zero) {
        if (t) throw validation_error("t", "give either t or the zero limit, not both");
        witness = default_alcove_witness(arr);
        eval_at.assign(arr.rank(), Rational(0));
    } else {
        if (!t) throw validation_error("t", "t is required unless the zero limit is requested");
        witness = *t;
        require_regular(witness, arr);
        eval_at = witness;
    }

    ConstantTerm ct = constant_term(arr, f, witness, window_scale);
    PiPower value{ct.polynomial.eval(eval_at), k};
    return {std::move(value), std::move(ct), limit_zero};
}

std::complex<double> OneDKernel::eval(const Rational& t, std::complex<double> z) const {
    if (t.floor() != floor_t)
        throw precondition_error("kernel was built for a different unit interval of t");
    std::complex<double> x = std::exp(z);
    std::complex<double> acc{};
    std::complex<double> tp{1.0, 0.0};
    const std::complex<double> td = to_complex(t);
    for (const auto& c : t_coeffs) {
        acc += c.eval(x) * tp;
        tp *= td;
    }
    return std::exp(z * floor_t.get_d()) * acc;
}

OneDKernel one_d_eisenstein(long k, const Rational& t) {
    if (k > -1) throw precondition_error("kernel order must be at most -1");
    if (t.is_integer()) throw precondition_error("t must not be an integer");
    OneDKernel out;
    out.k = k;
    out.floor_t = t.floor();
    const Rational n(out.floor_t);
    const RatFun1 x_fun(Poly1::x(), Poly1::constant(Rational(1)));

    // E_{-1} = e^{n z} x/(x-1); stepping down with
    // E_{j-1} = (dE_j/dz - t E_j)/j and d/dz = n + x d/dx on coefficients.
    std::vector<RatFun1> c{RatFun1(Poly1::x(), Poly1({Rational(-1), Rational(1)}))};
    for (long j = -1; j > k; --j) {
        std::vector<RatFun1> next(c.size() + 1);
        const Rational invj = Rational(1) / Rational(j);
        for (std::size_t i = 0; i < next.size(); ++i) {
            RatFun1 v;
            if (i < c.size()) v = c[i].scaled(n) + x_fun * c[i].derivative();
            if (i > 0) v = v - c[i - 1];
            next[i] = v.scaled(invj);
        }
        c = std::move(next);
    }
    out.t_coeffs = std::move(c);
    return out;
}

std::complex<double> kernel_eval(const Arrangement& arr, const RationalFunction& f,
                                 const std::vector<Rational>& t,
                                 const std::vector<std::complex<double>>& y,
                                 int window_scale) {
    validate_function(arr, f);
    require_regular(t, arr);
    if (static_cast<int>(y.size()) != arr.rank())
        throw validation_error("y", "point length differs from rank");
    if (window_scale < 1) throw validation_error("window-scale", "window scale must be >= 1");
    const int r = arr.rank();

    constexpr double two_pi = 6.283185307179586476925286766559;
    std::vector<std::complex<double>> pairings(arr.size());
    for (int i = 0; i < arr.size(); ++i) {
        std::complex<double> a{};
        for (int c = 0; c < r; ++c) a += y[c] * static_cast<double>(arr.form(i).coords[c]);
        double cycles = a.imag() / two_pi;
        if (std::abs(a.real()) < 1e-9 && std::abs(cycles - std::round(cycles)) < 1e-9)
            throw precondition_error("y pairs with form " + std::to_string(i) +
                                     " in 2*pi*i*Z, where the kernel is singular");
        pairings[i] = a;
    }
    if (f.numerator.is_zero()) return {};

    DiagonalBasis basis = diagonal_basis(arr);
    const int k = f.denominator_degree();
    const int d = std::max(0, f.numerator.total_degree());
    const int holo_cap = std::max(0, k - r);
    const int depth = k + (1 + d + holo_cap) * (1 << (r - 1));
    WindowSpec win = WindowSpec(r, VarWindow{-depth, depth + 2}).scaled(window_scale);

    std::complex<double> total{};
    for (const auto& ob : basis.members) {
        ObFrame frame = ob_frame(arr, ob);
        BoxReps box = floor_and_box_reps(t, arr, ob);
        auto factors = function_factors<std::complex<double>>(arr, f, frame);

        // Kernel denominators at y - z: the w_j series of
        // s(w) = 1/(1 - e^{-(a - w)}), via s' = s^2 - s.
        const int orders = std::min(max_useful_order(win), holo_cap);
        for (int j = 0; j < r; ++j) {
            std::complex<double> a = pairings[ob[j]];
            std::vector<std::complex<double>> s;
            s.reserve(orders + 1);
            s.push_back(1.0 / (1.0 - std::exp(-a)));
            for (int m = 0; m < orders; ++m) {
                std::complex<double> sq{};
                for (int i = 0; i <= m; ++i) sq += s[i] * s[m - i];
                s.push_back((sq - s[m]) / static_cast<double>(m + 1));
            }
            FormInCoords unit;
            unit.coeffs.assign(r, Rational(0));
            unit.coeffs[j] = Rational(1);
            factors.push_back({0, [s, unit](const WindowSpec& w) {
                                   return compose_univariate<std::complex<double>>(s, unit, w);
                               }});
        }

        // Kernel numerators: (1/index) sum_u e^{<u,y>} e^{-<u,z>}.
        std::vector<std::vector<std::complex<double>>> exps;
        std::vector<std::complex<double>> consts;
        for (const auto& u : box.representatives) {
            std::complex<double> uy{};
            for (int c = 0; c < r; ++c) uy += y[c] * static_cast<double>(u[c]);
            consts.push_back(std::exp(uy));
            FormInCoords uc = frame.form_coords(u);
            std::vector<std::complex<double>> coeffs(r);
            for (int j = 0; j < r; ++j) coeffs[j] = -to_complex(uc.coeffs[j]);
            exps.push_back(std::move(coeffs));
        }
        double inv_index = 1.0 / box.index.get_d();
        factors.push_back({0, [exps, consts, inv_index, holo_cap](const WindowSpec& w) {
                               NestedSeries<std::complex<double>> acc(w);
                               for (std::size_t u = 0; u < exps.size(); ++u)
                                   acc = acc.plus(
                                       expand_exponential<std::complex<double>>(exps[u], w,
                                                                                holo_cap)
                                           .scaled_ring(consts[u]));
                               return acc.scaled_ring(std::complex<double>(inv_index, 0.0));
                           }});

        // e^{<t,z>} at the given rational t.
        std::vector<std::complex<double>> tc(r);
        FormInCoords t_coords = frame.form_coords(t);
        for (int j = 0; j < r; ++j) tc[j] = to_complex(t_coords.coeffs[j]);
        factors.push_back({0, [tc, holo_cap](const WindowSpec& w) {
                               return expand_exponential<std::complex<double>>(tc, w, holo_cap);
                           }});

        total += residue_from_factors<std::complex<double>>(r, factors, win);
    }
    return total;
}

} // namespace jkres
