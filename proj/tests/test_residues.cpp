#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jkres/residues.hpp"
#include "test_support.hpp"

using namespace jkres;
using testsupport::Rng;
namespace ts = jkres::testsupport;

namespace {

// f(z) * prod_{alpha in sigma} 1/<alpha, y - z>, iterated residue along
// each diagonal-basis member, summed: reproduces f(y) for f spanned by
// fractions with generating denominators.
Rational reproduce_at(const Arrangement& arr, const RationalFunction& f,
                      const std::vector<Rational>& y, int window_scale = 1) {
    const DiagonalBasis basis = diagonal_basis(arr);
    const int r = arr.rank();
    const int k = f.denominator_degree();
    const int depth = k + (k - r + 1) * (1 << (r - 1));
    WindowSpec win = WindowSpec(r, VarWindow{-depth, depth + 2}).scaled(window_scale);
    const int orders = max_useful_order(win);

    Rational total;
    for (const auto& ob : basis.members) {
        ObFrame frame = ob_frame(arr, ob);
        auto factors = function_factors<Rational>(arr, f, frame);
        for (int idx : ob) {
            Rational c = dot(y, arr.form(idx).coords);
            REQUIRE(!c.is_zero());
            FormInCoords beta = frame.form_coords(arr.form(idx).coords);
            std::vector<Rational> u;
            u.reserve(orders + 1);
            Rational p = c.inverse();
            for (int n = 0; n <= orders; ++n) {
                u.push_back(p);
                p *= c.inverse();
            }
            factors.push_back({0, [u, beta](const WindowSpec& w) {
                                   return compose_univariate<Rational>(u, beta, w);
                               }});
        }
        total += residue_from_factors<Rational>(r, factors, win);
    }
    return total;
}

RationalFunction with_numerator(Polynomial num, std::map<int, int> den) {
    RationalFunction f;
    f.numerator = std::move(num);
    f.denominator = std::move(den);
    return f;
}

} // namespace

TEST_CASE("function validation") {
    Arrangement a2 = ts::a2();
    CHECK_THROWS_AS(validate_function(a2, ts::pure_fraction(2, {{3, 1}})), validation_error);
    CHECK_THROWS_AS(validate_function(a2, ts::pure_fraction(2, {{0, 0}})), validation_error);
    CHECK_THROWS_AS(validate_function(a2, ts::pure_fraction(2, {{-1, 2}})), validation_error);
    CHECK_THROWS_AS(validate_function(a2, ts::pure_fraction(3, {{0, 1}})), validation_error);
    CHECK_NOTHROW(validate_function(a2, ts::pure_fraction(2, {{0, 2}, {2, 1}})));
}

TEST_CASE("basis frames rewrite coordinates exactly") {
    Arrangement a2 = ts::a2();
    ObFrame frame = ob_frame(a2, {0, 2}); // w1 = z1, w2 = z1 + z2
    CHECK(frame.determinant == 1);
    FormInCoords f0 = frame.form_coords(a2.form(0).coords);
    CHECK(f0.coeffs == std::vector<Rational>{Rational(1), Rational(0)});
    FormInCoords f2 = frame.form_coords(a2.form(2).coords);
    CHECK(f2.coeffs == std::vector<Rational>{Rational(0), Rational(1)});
    FormInCoords f1 = frame.form_coords(a2.form(1).coords); // z2 = w2 - w1
    CHECK(f1.coeffs == std::vector<Rational>{Rational(-1), Rational(1)});

    auto rows = frame.substitution_rows();
    CHECK(rows[0] == std::vector<Rational>{Rational(1), Rational(0)});
    CHECK(rows[1] == std::vector<Rational>{Rational(-1), Rational(1)});

    CHECK_THROWS_AS(ob_frame(a2, {0, 0}), precondition_error); // singular
}

TEST_CASE("one variable residues") {
    Arrangement line = ts::line();
    CHECK(iterated_residue(line, {0}, ts::pure_fraction(1, {{0, 1}})) == Rational(1));
    CHECK(iterated_residue(line, {0}, ts::pure_fraction(1, {{0, 2}})) == Rational(0));
    CHECK(iterated_residue(line, {0},
                           with_numerator(Polynomial::monomial(1, {2}, Rational(1)), {{0, 3}})) ==
          Rational(1));
    CHECK(iterated_residue(line, {0},
                           with_numerator(Polynomial::monomial(1, {1}, Rational(5)), {{0, 3}})) ==
          Rational(0));
}

TEST_CASE("iterated residues depend on the ordered basis") {
    Arrangement a2 = ts::a2();
    RationalFunction phi01 = ts::pure_fraction(2, {{0, 1}, {1, 1}});
    RationalFunction phi02 = ts::pure_fraction(2, {{0, 1}, {2, 1}});
    RationalFunction phi12 = ts::pure_fraction(2, {{1, 1}, {2, 1}});

    CHECK(iterated_residue(a2, {0, 1}, phi01) == Rational(1));
    CHECK(iterated_residue(a2, {0, 1}, phi02) == Rational(0));
    CHECK(iterated_residue(a2, {0, 2}, phi02) == Rational(1));
    CHECK(iterated_residue(a2, {0, 2}, phi01) == Rational(0));
    // phi12 = 1/(z1 z2) - 1/(z1 (z1+z2)) pairs with both members.
    CHECK(iterated_residue(a2, {0, 1}, phi12) == Rational(1));
    CHECK(iterated_residue(a2, {0, 2}, phi12) == Rational(-1));
    // Order matters: along (1, 0) the expansion of 1/(z1+z2) flips.
    CHECK(iterated_residue(a2, {1, 0}, phi12) == Rational(0));
}

TEST_CASE("homogeneity filter kills degrees other than minus rank") {
    Arrangement a2 = ts::a2();
    DiagonalBasis basis = diagonal_basis(a2);
    CHECK(jk_residue(a2, ts::pure_fraction(2, {{0, 1}, {1, 1}, {2, 1}}), basis).empty());
    CHECK(jk_residue(a2, ts::pure_fraction(2, {{0, 1}}), basis).empty());
    CHECK(iterated_residue(a2, {0, 1}, ts::pure_fraction(2, {{0, 1}, {1, 1}, {2, 1}})) ==
          Rational(0));
}

TEST_CASE("duality of iterated residues against simple fractions") {
    for (const Arrangement& arr : {ts::a2(), ts::b2(), ts::a3()}) {
        DiagonalBasis basis = diagonal_basis(arr); // construction already verifies
        for (std::size_t i = 0; i < basis.members.size(); ++i) {
            std::map<int, int> den;
            for (int idx : basis.members[i]) den[idx] = 1;
            RationalFunction phi = ts::pure_fraction(arr.rank(), den);
            for (std::size_t j = 0; j < basis.members.size(); ++j)
                CHECK(iterated_residue(arr, basis.members[j], phi) ==
                      (i == j ? Rational(1) : Rational(0)));
        }
    }
}

TEST_CASE("projection formula on simple fractions") {
    Arrangement a2 = ts::a2();
    DiagonalBasis basis = diagonal_basis(a2);
    RationalFunction phi12 = ts::pure_fraction(2, {{1, 1}, {2, 1}});

    SimpleElement expected{{BasisSet{0, 1}, Rational(1)}, {BasisSet{0, 2}, Rational(-1)}};
    CHECK(jk_residue(a2, phi12, basis) == expected);

    // P * phi with P(0) = 1 projects to the same element.
    Polynomial p = Polynomial::constant(2, Rational(1)) +
                   Polynomial::monomial(2, {1, 0}, Rational(3)) +
                   Polynomial::monomial(2, {1, 1}, Rational(5));
    CHECK(jk_residue(a2, with_numerator(p, {{1, 1}, {2, 1}}), basis) == expected);

    // P(0) = 2 scales it; the non-constant part is filtered out.
    Polynomial q = Polynomial::constant(2, Rational(2)) +
                   Polynomial::monomial(2, {0, 1}, Rational(7));
    SimpleElement doubled{{BasisSet{0, 1}, Rational(2)}, {BasisSet{0, 2}, Rational(-2)}};
    CHECK(jk_residue(a2, with_numerator(q, {{1, 1}, {2, 1}}), basis) == doubled);
}

TEST_CASE("projection annihilates derivatives") {
    Rng rng(2024);
    Arrangement a2 = ts::a2();
    DiagonalBasis basis = diagonal_basis(a2);
    for (int c = 0; c < 10; ++c) {
        std::map<int, int> den;
        for (int i = 0; i < 3; ++i) {
            int m = static_cast<int>(rng.range(0, 2));
            if (m > 0) den[i] = m;
        }
        if (den.empty()) den[0] = 1;
        Polynomial num = Polynomial::constant(2, ts::random_nonzero_rational(rng));
        if (rng.range(0, 1))
            num += Polynomial::monomial(2, {1, 0}, ts::random_rational(rng));
        RationalFunction f = with_numerator(num, den);
        std::vector<Rational> v{ts::random_rational(rng, 4, 4), ts::random_rational(rng, 4, 4)};
        if (v[0].is_zero() && v[1].is_zero()) v[0] = Rational(1);
        RationalFunction df = directional_derivative(a2, f, v);
        CHECK(jk_residue(a2, df, basis).empty());
    }
}

TEST_CASE("projection coordinates are the member residues") {
    Rng rng(7777);
    Arrangement a2 = ts::a2();
    DiagonalBasis basis = diagonal_basis(a2);
    for (int c = 0; c < 8; ++c) {
        std::map<int, int> den;
        den[0] = static_cast<int>(rng.range(0, 2));
        den[1] = static_cast<int>(rng.range(0, 2));
        den[2] = static_cast<int>(rng.range(1, 2));
        for (auto it = den.begin(); it != den.end();)
            it = it->second == 0 ? den.erase(it) : std::next(it);
        Polynomial num = Polynomial::constant(2, Rational(1));
        if (rng.range(0, 1))
            num += Polynomial::monomial(2, {0, 1}, ts::random_rational(rng));
        RationalFunction f = with_numerator(num, den);
        SimpleElement el = jk_residue(a2, f, basis);
        for (const auto& ob : basis.members) {
            Rational coeff;
            auto it = el.find(BasisSet(ob.begin(), ob.end()));
            if (it != el.end()) coeff = it->second;
            CHECK(iterated_residue(a2, ob, f) == coeff);
        }
    }
}

TEST_CASE("directional derivatives follow the quotient rule") {
    Arrangement a2 = ts::a2();
    RationalFunction f = ts::pure_fraction(2, {{0, 1}, {1, 1}});
    RationalFunction df = directional_derivative(a2, f, {Rational(1), Rational(1)});
    CHECK(df.denominator == std::map<int, int>{{0, 2}, {1, 2}});
    Polynomial expect = -(Polynomial::variable(2, 0) + Polynomial::variable(2, 1));
    CHECK(df.numerator == expect);

    RationalFunction g = with_numerator(Polynomial::variable(2, 0), {{1, 1}});
    RationalFunction dg = directional_derivative(a2, g, {Rational(0), Rational(1)});
    CHECK(dg.denominator == std::map<int, int>{{1, 2}});
    CHECK(dg.numerator == -Polynomial::variable(2, 0));

    // Exact check at a point: derivative of f along v equals the limit
    // polynomial identity num'(z)/den'(z); compare to a symmetric
    // difference quotient evaluated exactly.
    std::vector<Rational> z{Rational(1, 3), Rational(1, 7)};
    Rational h(1, 1000000);
    std::vector<Rational> zp{z[0] + h, z[1] + h};
    std::vector<Rational> zm{z[0] - h, z[1] - h};
    Rational numeric =
        (eval_function<Rational>(a2, f, zp) - eval_function<Rational>(a2, f, zm)) / (Rational(2) * h);
    Rational exact = eval_function<Rational>(a2, df, z);
    CHECK((numeric - exact).abs() < Rational(1, 1000));
}

TEST_CASE("independent-denominator decomposition of a dependent product") {
    Arrangement a2 = ts::a2();
    auto terms = decompose_to_basis_fractions(a2, {{0, 1}, {1, 1}, {2, 1}});
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].coefficient == Rational(1));
    CHECK(terms[0].multiplicities == std::map<int, int>{{0, 2}, {1, 1}});
    CHECK(terms[1].coefficient == Rational(-1));
    CHECK(terms[1].multiplicities == std::map<int, int>{{0, 2}, {2, 1}});
}

TEST_CASE("decomposition recombines to the original function") {
    Rng rng(31);
    for (const Arrangement& arr : {ts::a2(), ts::b2()}) {
        for (int c = 0; c < 6; ++c) {
            std::map<int, int> den;
            for (int i = 0; i < arr.size(); ++i) {
                int m = static_cast<int>(rng.range(0, 2));
                if (m > 0) den[i] = m;
            }
            if (static_cast<int>(den.size()) < 2) den = {{0, 1}, {1, 2}};
            auto terms = decompose_to_basis_fractions(arr, den);
            for (const auto& term : terms) {
                std::vector<int> support;
                for (const auto& [i, m] : term.multiplicities) {
                    CHECK(m >= 1);
                    support.push_back(i);
                }
                CHECK(static_cast<int>(support.size()) <= arr.rank());
                IntMatrix sb = basis_matrix(arr, support);
                if (static_cast<int>(support.size()) == arr.rank()) CHECK(det(sb) != 0);
            }
            for (int trial = 0; trial < 3; ++trial) {
                std::vector<Rational> z = ts::random_regular_point(rng, arr);
                Rational lhs = eval_function<Rational>(arr, ts::pure_fraction(arr.rank(), den), z);
                Rational rhs;
                for (const auto& term : terms)
                    rhs += term.coefficient *
                           eval_function<Rational>(arr,
                                                   ts::pure_fraction(arr.rank(),
                                                                     term.multiplicities),
                                                   z);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("reproducing kernel identity for simple fractions") {
    Arrangement a2 = ts::a2();
    RationalFunction f = ts::pure_fraction(2, {{0, 1}, {1, 1}});
    std::vector<Rational> y{Rational(1, 3), Rational(1, 7)};
    CHECK(reproduce_at(a2, f, y) == eval_function<Rational>(a2, f, y)); // = 21

    RationalFunction g = ts::pure_fraction(2, {{0, 2}, {2, 1}});
    CHECK(reproduce_at(a2, g, y) == eval_function<Rational>(a2, g, y));

    // Not restricted to small y: the identity is rational in y.
    std::vector<Rational> far{Rational(22, 7), Rational(-13, 5)};
    CHECK(reproduce_at(a2, f, far) == eval_function<Rational>(a2, f, far));
}

TEST_CASE("residues are invariant under window enlargement") {
    Rng rng(555);
    Arrangement a2 = ts::a2();
    for (int c = 0; c < 5; ++c) {
        std::map<int, int> den{{0, static_cast<int>(rng.range(1, 2))},
                               {2, static_cast<int>(rng.range(1, 2))}};
        Polynomial num = Polynomial::constant(2, Rational(1)) +
                         Polynomial::monomial(2, {1, 0}, ts::random_rational(rng));
        RationalFunction f = with_numerator(num, den);
        Rational base = iterated_residue(a2, {0, 2}, f, 1);
        CHECK(iterated_residue(a2, {0, 2}, f, 2) == base);
        CHECK(iterated_residue(a2, {0, 2}, f, 3) == base);
    }
}
