#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "jkres/eisenstein.hpp"
#include "jkres/oracle.hpp"
#include "test_support.hpp"

using namespace jkres;
namespace ts = jkres::testsupport;

namespace {

Polynomial poly1(std::vector<Rational> ascending) {
    Polynomial p = Polynomial::constant(1, Rational(0));
    for (std::size_t i = 0; i < ascending.size(); ++i)
        p += Polynomial::monomial(1, {static_cast<int>(i)}, ascending[i]);
    return p;
}

RationalFunction power_fraction(int nvars, int form, int mult) {
    return ts::pure_fraction(nvars, {{form, mult}});
}

std::map<int, int> triple_square_mults() { return {{0, 2}, {1, 2}, {2, 2}}; }

} // namespace

TEST_CASE("one variable constant terms are Bernoulli polynomials") {
    Arrangement line = ts::line();
    std::vector<Rational> t{Rational(1, 3)};

    // -B_k(t)/k! on the unit interval, hard coded.
    std::vector<Polynomial> expected = {
        poly1({Rational(1, 2), Rational(-1)}),
        poly1({Rational(-1, 12), Rational(1, 2), Rational(-1, 2)}),
        poly1({Rational(0), Rational(-1, 12), Rational(1, 4), Rational(-1, 6)}),
        poly1({Rational(1, 720), Rational(0), Rational(-1, 24), Rational(1, 12),
               Rational(-1, 24)}),
        poly1({Rational(0), Rational(1, 720), Rational(0), Rational(-1, 72), Rational(1, 48),
               Rational(-1, 120)}),
    };
    std::vector<Rational> at_third = {Rational(1, 6), Rational(1, 36), Rational(-1, 162),
                                      Rational(-13, 19440), Rational(1, 5832)};
    for (int k = 1; k <= 5; ++k) {
        ConstantTerm ct = constant_term(line, power_fraction(1, 0, k), t);
        CHECK(ct.polynomial == expected[k - 1]);
        CHECK(ct.polynomial.eval(t) == at_third[k - 1]);
        CHECK(ct.degree_bound == k);
    }
    ConstantTerm c2 = constant_term(line, power_fraction(1, 0, 2), {Rational(3, 10)});
    CHECK(c2.polynomial.eval(std::vector<Rational>{Rational(3, 10)}) == Rational(13, 600));
}

TEST_CASE("the polynomial changes with the unit interval but the sum is periodic") {
    Arrangement line = ts::line();
    ConstantTerm shifted = constant_term(line, power_fraction(1, 0, 1), {Rational(3, 2)});
    CHECK(shifted.polynomial == poly1({Rational(3, 2), Rational(-1)}));

    // Periodicity: the analytic sum at t and t + integer agree even
    // though the alcove polynomials differ.
    ConstantTerm base2 = constant_term(line, power_fraction(1, 0, 2), {Rational(3, 10)});
    ConstantTerm far2 = constant_term(line, power_fraction(1, 0, 2), {Rational(13, 10)});
    CHECK(base2.polynomial != far2.polynomial);
    CHECK(far2.polynomial.eval(std::vector<Rational>{Rational(13, 10)}) ==
          base2.polynomial.eval(std::vector<Rational>{Rational(3, 10)}));

    Arrangement a2 = ts::a2();
    auto ns = [&](Rational t1, Rational t2) {
        return normalized_sum(a2, triple_square_mults(),
                              std::optional<std::vector<Rational>>({{t1, t2}}), false);
    };
    NormalizedSumResult here = ns(Rational(1, 3), Rational(1, 5));
    NormalizedSumResult there = ns(Rational(4, 3), Rational(-9, 5));
    CHECK(here.value.two_i_pi_exponent == 6);
    CHECK(there.value.two_i_pi_exponent == 6);
    CHECK(here.value.coefficient == there.value.coefficient);
}

TEST_CASE("multiplying by a polynomial differentiates the constant term") {
    Arrangement line = ts::line();
    ConstantTerm c3 = constant_term(line, power_fraction(1, 0, 3), {Rational(1, 3)});
    ConstantTerm c2 = constant_term(line, power_fraction(1, 0, 2), {Rational(1, 3)});
    Polynomial z = Polynomial::variable(1, 0);
    CHECK(apply_diff_operator(z, c3.polynomial) == c2.polynomial);

    Arrangement a2 = ts::a2();
    RationalFunction f;
    f.numerator = Polynomial::constant(2, Rational(1));
    f.denominator = triple_square_mults();
    std::vector<Rational> t{Rational(1, 3), Rational(1, 5)};
    ConstantTerm base = constant_term(a2, f, t);

    RationalFunction pf = f;
    pf.numerator = Polynomial::monomial(2, {1, 1}, Rational(1)); // z1 z2
    ConstantTerm derived = constant_term(a2, pf, t);
    CHECK(derived.polynomial == apply_diff_operator(pf.numerator, base.polynomial));
}

TEST_CASE("zeta ladder on the line") {
    Arrangement line = ts::line();
    struct Row {
        int k;
        Rational coeff;      // multiple of (2 pi i)^k
        Rational real_coeff; // multiple of (2 pi)^k
    };
    std::vector<Row> rows = {
        {2, Rational(-1, 12), Rational(1, 12)},
        {4, Rational(1, 720), Rational(1, 720)},
        {6, Rational(-1, 30240), Rational(1, 30240)},
    };
    for (const Row& row : rows) {
        NormalizedSumResult r =
            normalized_sum(line, {{0, row.k}}, std::nullopt, true);
        CHECK(r.value.two_i_pi_exponent == row.k);
        CHECK(r.value.coefficient == row.coeff);
        auto real = two_pi_real_coefficient(r.value);
        REQUIRE(real.has_value());
        CHECK(*real == row.real_coeff);
        CHECK(r.limit_zero);
    }
    // Odd powers have no real normal form.
    PiPower odd{Rational(1, 6), 3};
    CHECK(!two_pi_real_coefficient(odd).has_value());
}

TEST_CASE("double zeta value of the triple product") {
    Arrangement a2 = ts::a2();
    NormalizedSumResult r = normalized_sum(a2, triple_square_mults(), std::nullopt, true);
    CHECK(r.value.two_i_pi_exponent == 6);
    CHECK(r.value.coefficient == Rational(-1, 30240));
    auto real = two_pi_real_coefficient(r.value);
    REQUIRE(real.has_value());
    CHECK(*real == Rational(1, 30240)); // sum = (2 pi)^6 / 30240 = 2 pi^6 / 945
    CHECK(r.ct.alcove_witness == std::vector<Rational>{Rational(1, 1000), Rational(1, 2000)});
}

TEST_CASE("piecewise polynomial for the triple product") {
    Arrangement a2 = ts::a2();
    RationalFunction f;
    f.numerator = Polynomial::constant(2, Rational(1));
    f.denominator = triple_square_mults();

    ConstantTerm ct = constant_term(a2, f, {Rational(1, 3), Rational(1, 5)});
    CHECK(ct.degree_bound == 6);
    CHECK(ct.polynomial.total_degree() == 6);

    // Frozen coefficients of the alcove polynomial (23 terms).
    std::vector<std::pair<std::vector<int>, Rational>> frozen = {
        {{0, 0}, Rational(-1, 30240)}, {{0, 2}, Rational(1, 360)},
        {{0, 4}, Rational(-1, 72)},    {{0, 6}, Rational(1, 120)},
        {{1, 1}, Rational(-1, 360)},   {{1, 2}, Rational(-1, 48)},
        {{1, 3}, Rational(1, 36)},     {{1, 4}, Rational(1, 48)},
        {{1, 5}, Rational(-1, 40)},    {{2, 0}, Rational(1, 360)},
        {{2, 1}, Rational(1, 48)},     {{2, 2}, Rational(1, 24)},
        {{2, 3}, Rational(-1, 24)},    {{2, 4}, Rational(1, 48)},
        {{3, 0}, Rational(-1, 72)},    {{3, 1}, Rational(-1, 18)},
        {{3, 2}, Rational(-1, 24)},    {{4, 0}, Rational(1, 36)},
        {{4, 1}, Rational(1, 16)},     {{4, 2}, Rational(1, 48)},
        {{5, 0}, Rational(-1, 40)},    {{5, 1}, Rational(-1, 40)},
        {{6, 0}, Rational(1, 120)},
    };
    Polynomial expected = Polynomial::constant(2, Rational(0));
    for (const auto& [e, c] : frozen) expected += Polynomial::monomial(2, e, c);
    CHECK(ct.polynomial == expected);

    // Same alcove, same polynomial.
    ConstantTerm tiny = constant_term(a2, f, {Rational(1, 1000), Rational(1, 2000)});
    ConstantTerm mid = constant_term(a2, f, {Rational(1, 2), Rational(1, 4)});
    CHECK(tiny.polynomial == ct.polynomial);
    CHECK(mid.polynomial == ct.polynomial);

    // Across the wall t1 = t2 the polynomial is the mirror image.
    ConstantTerm mirror = constant_term(a2, f, {Rational(1, 5), Rational(1, 3)});
    Polynomial swapped = Polynomial::constant(2, Rational(0));
    for (const auto& [e, c] : frozen)
        swapped += Polynomial::monomial(2, {e[1], e[0]}, c);
    CHECK(mirror.polynomial == swapped);
    CHECK(mirror.polynomial != ct.polynomial);

    // The frozen value at the evaluation point.
    CHECK(ct.polynomial.eval(std::vector<Rational>{Rational(1, 3), Rational(1, 5)}) ==
          Rational(276727, 38272500000));

    NormalizedSumResult r = normalized_sum(
        a2, triple_square_mults(),
        std::optional<std::vector<Rational>>({{Rational(1, 3), Rational(1, 5)}}), false);
    CHECK(r.value.coefficient == Rational(276727, 38272500000));
    CHECK(!r.limit_zero);
}

TEST_CASE("box representatives of alcove kernels") {
    Arrangement a2 = ts::a2();
    AlcoveKernel k1 = alcove_kernel(a2, {0, 1}, {Rational(1, 3), Rational(1, 5)});
    CHECK(k1.index == 1);
    CHECK(k1.numerator_exponents == std::vector<std::vector<long>>{{0, 0}});

    Arrangement b2 = ts::b2();
    AlcoveKernel k2 = alcove_kernel(b2, {2, 3}, {Rational(1, 2), Rational(1, 4)});
    CHECK(k2.index == 2);
    CHECK(k2.numerator_exponents == std::vector<std::vector<long>>{{-1, 0}, {0, 0}});
}

TEST_CASE("closed form of the one variable kernel") {
    OneDKernel e1 = one_d_eisenstein(-1, Rational(1, 3));
    CHECK(e1.floor_t == 0);
    REQUIRE(e1.t_coeffs.size() == 1);
    CHECK(e1.t_coeffs[0] == RatFun1(Poly1::x(), Poly1({Rational(-1), Rational(1)})));

    OneDKernel e2 = one_d_eisenstein(-2, Rational(1, 3));
    REQUIRE(e2.t_coeffs.size() == 2);
    CHECK(e2.t_coeffs[0] ==
          RatFun1(Poly1::x(), Poly1({Rational(1), Rational(-2), Rational(1)})));
    CHECK(e2.t_coeffs[1] == RatFun1(Poly1::x(), Poly1({Rational(-1), Rational(1)})));

    // The downward recursion holds exactly as rational functions:
    // coeff_i of E_{k-1} = (coeff_i' * x - coeff_{i-1}) / k.
    RatFun1 x(Poly1::x(), Poly1::constant(Rational(1)));
    for (long k = -1; k >= -3; --k) {
        OneDKernel ek = one_d_eisenstein(k, Rational(1, 3));
        OneDKernel next = one_d_eisenstein(k - 1, Rational(1, 3));
        REQUIRE(next.t_coeffs.size() == ek.t_coeffs.size() + 1);
        RatFun1 invk(Poly1::constant(Rational(1, k)), Poly1::constant(Rational(1)));
        for (std::size_t i = 0; i < next.t_coeffs.size(); ++i) {
            RatFun1 expect;
            if (i < ek.t_coeffs.size()) expect = ek.t_coeffs[i].derivative() * x;
            if (i > 0) expect = expect - ek.t_coeffs[i - 1];
            CHECK(next.t_coeffs[i] == invk * expect);
        }
    }

    // Frozen numeric value.
    std::complex<double> z(0.3, 0.2);
    std::complex<double> v = e2.eval(Rational(1, 3), z);
    CHECK(std::abs(v - std::complex<double>(3.8196917076869736, -7.607379944774673)) < 1e-12);

    // A different unit interval shifts the exponential prefactor.
    OneDKernel shifted = one_d_eisenstein(-1, Rational(3, 2));
    CHECK(shifted.floor_t == 1);

    CHECK_THROWS_AS(one_d_eisenstein(0, Rational(1, 3)), precondition_error);
    CHECK_THROWS_AS(one_d_eisenstein(-1, Rational(2)), precondition_error);
    CHECK_THROWS_AS(e2.eval(Rational(3, 2), z), precondition_error);
}

TEST_CASE("kernel evaluation matches the closed form and the lattice sum") {
    Arrangement line = ts::line();
    std::vector<Rational> t{Rational(1, 3)};
    std::complex<double> z(0.3, 0.2);
    std::complex<double> via_series =
        kernel_eval(line, power_fraction(1, 0, 2), t, {z});
    std::complex<double> via_closed = one_d_eisenstein(-2, Rational(1, 3)).eval(Rational(1, 3), z);
    CHECK(std::abs(via_series - via_closed) < 1e-11);

    TruncatedSum s = lattice_sum(line, power_fraction(1, 0, 3), t, {z}, 2000);
    std::complex<double> closed3 = one_d_eisenstein(-3, Rational(1, 3)).eval(Rational(1, 3), z);
    CHECK(std::abs(s.value - closed3) <= s.tail_bound + 1e-8);

    Arrangement a2 = ts::a2();
    RationalFunction f;
    f.numerator = Polynomial::constant(2, Rational(1));
    f.denominator = triple_square_mults();
    std::vector<std::complex<double>> y{{0.4, 0.1}, {0.3, -0.2}};
    std::complex<double> v =
        kernel_eval(a2, f, {Rational(1, 3), Rational(1, 5)}, y);
    CHECK(std::abs(v - std::complex<double>(62.68467364137368, 90.13943882794729)) < 1e-9);

    CHECK_THROWS_AS(kernel_eval(a2, f, {Rational(1, 3), Rational(1, 5)}, {{0.0, 0.0}, {0.5, 0.0}}),
                    precondition_error);
}

TEST_CASE("normalized sum input gates") {
    Arrangement a2 = ts::a2();
    // Total multiplicity must exceed the rank.
    CHECK_THROWS_AS(normalized_sum(a2, {{0, 1}, {1, 1}}, std::nullopt, true),
                    precondition_error);
    // Exactly one of t and the zero limit.
    CHECK_THROWS_AS(normalized_sum(a2, triple_square_mults(),
                                   std::optional<std::vector<Rational>>(
                                       {{Rational(1, 3), Rational(1, 5)}}),
                                   true),
                    validation_error);
    CHECK_THROWS_AS(normalized_sum(a2, triple_square_mults(), std::nullopt, false), validation_error);
    CHECK_THROWS_AS(normalized_sum(a2, {}, std::nullopt, true), validation_error);
    // Points on a wall are rejected before any expansion runs.
    CHECK_THROWS_AS(normalized_sum(a2, triple_square_mults(),
                                   std::optional<std::vector<Rational>>(
                                       {{Rational(1, 2), Rational(1, 2)}}),
                                   false),
                    precondition_error);
}

TEST_CASE("deterministic witness near the origin") {
    CHECK(default_alcove_witness(ts::a2()) ==
          std::vector<Rational>{Rational(1, 1000), Rational(1, 2000)});
    CHECK(default_alcove_witness(ts::line()) == std::vector<Rational>{Rational(1, 1000)});
    // The witness never sits on a wall.
    for (const Arrangement& arr : {ts::a2(), ts::b2(), ts::a3()})
        CHECK(is_alcove_regular(default_alcove_witness(arr), arr));
}

TEST_CASE("window doubling reports the scale it settled on") {
    Arrangement line = ts::line();
    ConstantTerm ct = constant_term(line, power_fraction(1, 0, 2), {Rational(1, 3)}, 2);
    CHECK(ct.window_scale_used >= 2);
    ConstantTerm base = constant_term(line, power_fraction(1, 0, 2), {Rational(1, 3)});
    CHECK(ct.polynomial == base.polynomial);
}
