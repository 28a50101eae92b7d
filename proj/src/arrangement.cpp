#include "jkres/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace jkres {

namespace {

long gcd_of(const std::vector<long>& v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, std::abs(x));
    return g;
}

bool proportional(const std::vector<long>& a, const std::vector<long>& b) {
    // Both primitive, so proportional means equal up to sign.
    return a == b || std::equal(a.begin(), a.end(), b.begin(),
                                [](long x, long y) { return x == -y; });
}

RationalMatrix rows_matrix(const std::vector<LinearForm>& forms,
                           const std::vector<int>& idx, int rank) {
    RationalMatrix m(static_cast<int>(idx.size()), rank);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < rank; ++j) m.at(i, j) = Rational(forms[idx[i]].coords[j]);
    return m;
}

// Primitive sign-normalized kernel vector of r-1 independent forms,
// via signed maximal minors.
std::optional<std::vector<long>> wall_normal(const std::vector<LinearForm>& forms,
                                             const std::vector<int>& idx, int rank) {
    std::vector<mpz_class> minor(rank);
    bool any = false;
    for (int drop = 0; drop < rank; ++drop) {
        IntMatrix m(rank - 1, rank - 1);
        for (int i = 0; i < rank - 1; ++i) {
            int cc = 0;
            for (int j = 0; j < rank; ++j) {
                if (j == drop) continue;
                m.at(i, cc++) = forms[idx[i]].coords[j];
            }
        }
        mpz_class d = det(m);
        if (drop % 2 == 1) d = -d;
        minor[drop] = d;
        if (d != 0) any = true;
    }
    if (!any) return std::nullopt;
    mpz_class g = 0;
    for (const auto& x : minor) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    std::vector<long> v(rank);
    for (int j = 0; j < rank; ++j) {
        mpz_class q = minor[j] / g;
        if (!q.fits_slong_p()) throw precondition_error("wall normal out of range");
        v[j] = q.get_si();
    }
    for (long x : v) {
        if (x > 0) break;
        if (x < 0) {
            for (long& y : v) y = -y;
            break;
        }
    }
    return v;
}

} // namespace

Arrangement::Arrangement(int rank, std::vector<LinearForm> forms)
    : rank_(rank), forms_(std::move(forms)) {
    if (rank_ < 1) throw validation_error("rank", "rank must be at least 1");
    if (forms_.empty()) throw validation_error("forms", "arrangement needs at least one form");
    for (std::size_t i = 0; i < forms_.size(); ++i) {
        const auto& v = forms_[i].coords;
        std::string where = "forms[" + std::to_string(i) + "]";
        if (static_cast<int>(v.size()) != rank_)
            throw validation_error(where, "form length differs from rank");
        long g = gcd_of(v);
        if (g == 0) throw validation_error(where, "zero form");
        if (g != 1) throw validation_error(where, "form is not primitive (gcd " +
                                                      std::to_string(g) + ")");
        for (std::size_t k = 0; k < i; ++k)
            if (proportional(forms_[k].coords, v))
                throw validation_error(where, "proportional to forms[" + std::to_string(k) + "]");
    }
    std::vector<int> all(forms_.size());
    std::iota(all.begin(), all.end(), 0);
    if (jkres::rank(rows_matrix(forms_, all, rank_)) != rank_)
        throw validation_error("forms", "forms do not span rank-" + std::to_string(rank_) +
                                            " space");

    if (rank_ == 1) {
        walls_ = {{1}};
        return;
    }
    std::set<std::vector<long>> uniq;
    std::vector<int> pick(rank_ - 1);
    std::iota(pick.begin(), pick.end(), 0);
    const int n = static_cast<int>(forms_.size());
    for (;;) {
        if (auto v = wall_normal(forms_, pick, rank_)) uniq.insert(*v);
        int i = rank_ - 2;
        while (i >= 0 && pick[i] == n - (rank_ - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < rank_ - 1; ++j) pick[j] = pick[j - 1] + 1;
    }
    walls_.assign(uniq.begin(), uniq.end());
}

std::vector<BasisSet> enumerate_bases(const Arrangement& arr) {
    std::vector<BasisSet> out;
    const int n = arr.size(), r = arr.rank();
    std::vector<int> pick(r);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        if (rank(rows_matrix(arr.forms(), pick, r)) == r) out.push_back(pick);
        int i = r - 1;
        while (i >= 0 && pick[i] == n - (r - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

std::vector<BasisSet> nbc_bases(const Arrangement& arr) {
    std::vector<BasisSet> out;
    for (const auto& sigma : enumerate_bases(arr)) {
        bool broken = false;
        for (int g = 0; g < arr.size() && !broken; ++g) {
            std::vector<int> later;
            for (int s : sigma)
                if (s > g) later.push_back(s);
            if (later.empty()) continue;
            auto with = later;
            with.push_back(g);
            if (rank(rows_matrix(arr.forms(), with, arr.rank())) ==
                rank(rows_matrix(arr.forms(), later, arr.rank())))
                broken = true;
        }
        if (!broken) out.push_back(sigma);
    }
    return out;
}

IntMatrix basis_matrix(const Arrangement& arr, const std::vector<int>& sigma) {
    std::vector<std::vector<long>> cols;
    cols.reserve(sigma.size());
    for (int i : sigma) cols.push_back(arr.form(i).coords);
    return IntMatrix::from_columns(cols);
}

std::optional<std::vector<long>> violated_wall(const std::vector<Rational>& t,
                                               const Arrangement& arr) {
    if (static_cast<int>(t.size()) != arr.rank())
        throw validation_error("t", "point length differs from rank");
    for (const auto& v : arr.wall_normals())
        if (dot(t, v).is_integer()) return v;
    return std::nullopt;
}

bool is_alcove_regular(const std::vector<Rational>& t, const Arrangement& arr) {
    return !violated_wall(t, arr).has_value();
}

std::vector<Rational> sigma_coordinates(const std::vector<Rational>& t,
                                        const Arrangement& arr, const BasisSet& sigma) {
    if (static_cast<int>(sigma.size()) != arr.rank())
        throw precondition_error("index set size differs from rank");
    for (int i : sigma)
        if (i < 0 || i >= arr.size())
            throw precondition_error("form index " + std::to_string(i) + " out of range");
    if (static_cast<int>(t.size()) != arr.rank())
        throw precondition_error("point size differs from rank");
    RationalMatrix a(arr.rank(), arr.rank());
    for (int i = 0; i < arr.rank(); ++i)
        for (int j = 0; j < arr.rank(); ++j)
            a.at(i, j) = Rational(arr.form(sigma[j]).coords[i]);
    auto x = solve(std::move(a), t);
    if (!x) throw precondition_error("index set is not a basis");
    return *x;
}

BoxReps floor_and_box_reps(const std::vector<Rational>& t, const Arrangement& arr,
                           const BasisSet& sigma) {
    const int r = arr.rank();
    auto c = sigma_coordinates(t, arr, sigma);
    for (int j = 0; j < r; ++j)
        if (c[j].is_integer())
            throw precondition_error("point lies on the wall of basis form " +
                                     std::to_string(sigma[j]));
    BoxReps out;
    out.floor_vector.assign(r, 0);
    for (int j = 0; j < r; ++j) {
        mpz_class fl = c[j].floor();
        if (!fl.fits_slong_p()) throw precondition_error("floor vector out of range");
        for (int i = 0; i < r; ++i) out.floor_vector[i] += fl.get_si() * arr.form(sigma[j]).coords[i];
    }

    // u = t - sum_j g_j alpha_j with g in [0,1)^r: enumerate the integer
    // points of the bounding box and keep those with sigma-coords of
    // t - u in [0,1).
    std::vector<long> lo(r), hi(r);
    for (int i = 0; i < r; ++i) {
        Rational lo_q = t[i], hi_q = t[i];
        for (int j = 0; j < r; ++j) {
            long a = arr.form(sigma[j]).coords[i];
            if (a > 0)
                lo_q -= Rational(a);
            else
                hi_q -= Rational(a);
        }
        lo[i] = static_cast<long>(lo_q.floor().get_si());
        hi[i] = static_cast<long>(hi_q.floor().get_si()) + 1;
    }
    RationalMatrix a(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) a.at(i, j) = Rational(arr.form(sigma[j]).coords[i]);
    RationalMatrix ainv = inverse(a);

    std::vector<long> u = lo;
    for (;;) {
        std::vector<Rational> diff(r);
        for (int i = 0; i < r; ++i) diff[i] = t[i] - Rational(u[i]);
        auto g = ainv.apply(diff);
        bool inside = std::all_of(g.begin(), g.end(), [](const Rational& q) {
            return q >= Rational(0) && q < Rational(1);
        });
        if (inside) out.representatives.push_back(u);
        int i = r - 1;
        while (i >= 0 && u[i] == hi[i]) {
            u[i] = lo[i];
            --i;
        }
        if (i < 0) break;
        ++u[i];
    }

    out.index = abs(det(basis_matrix(arr, sigma)));
    if (out.index != static_cast<long>(out.representatives.size()))
        throw verification_error("box representative count differs from the lattice index");
    return out;
}

} // namespace jkres
