#include "jkres/residues.hpp"

#include <algorithm>
#include <deque>

#include "jkres/errors.hpp"

namespace jkres {

void validate_function(const Arrangement& arr, const RationalFunction& f) {
    if (!f.numerator.is_zero() && f.numerator.nvars() != arr.rank() &&
        f.numerator.nvars() != 0)
        throw validation_error("numerator", "numerator variable count differs from rank");
    for (const auto& [i, m] : f.denominator) {
        if (i < 0 || i >= arr.size())
            throw validation_error("denominator", "form index " + std::to_string(i) +
                                                      " out of range");
        if (m < 1)
            throw validation_error("denominator", "multiplicity of form " + std::to_string(i) +
                                                      " must be positive");
    }
}

Polynomial form_polynomial(const Arrangement& arr, int form_index) {
    Polynomial p(arr.rank());
    for (int j = 0; j < arr.rank(); ++j) {
        Polynomial::Exponents e(arr.rank(), 0);
        e[j] = 1;
        p.add_term(e, Rational(arr.form(form_index).coords[j]));
    }
    return p;
}

RationalFunction directional_derivative(const Arrangement& arr, const RationalFunction& f,
                                        const std::vector<Rational>& v) {
    // (P / prod b^m)' = [P' prod b - P sum m_j <b_j, v> prod_{k != j} b_k] / prod b^{m+1}
    Polynomial dnum(arr.rank());
    for (int j = 0; j < arr.rank(); ++j)
        dnum += f.numerator.derivative(j).scaled(v[j]);

    Polynomial all_forms = Polynomial::constant(arr.rank(), Rational(1));
    for (const auto& [i, m] : f.denominator) all_forms = all_forms * form_polynomial(arr, i);

    Polynomial correction(arr.rank());
    for (const auto& [i, m] : f.denominator) {
        Rational pairing = dot(v, arr.form(i).coords);
        if (pairing.is_zero()) continue;
        Polynomial others = Polynomial::constant(arr.rank(), Rational(1));
        for (const auto& [k, mk] : f.denominator)
            if (k != i) others = others * form_polynomial(arr, k);
        correction += others.scaled(pairing * Rational(m));
    }

    RationalFunction out;
    out.numerator = dnum * all_forms - f.numerator * correction;
    for (const auto& [i, m] : f.denominator) out.denominator[i] = m + 1;
    return out;
}

FormInCoords ObFrame::form_coords(const std::vector<long>& gamma) const {
    std::vector<Rational> g(gamma.size());
    for (std::size_t i = 0; i < gamma.size(); ++i) g[i] = Rational(gamma[i]);
    return form_coords(g);
}

FormInCoords ObFrame::form_coords(const std::vector<Rational>& gamma) const {
    const int r = inverse.rows();
    FormInCoords out;
    out.coeffs.assign(r, Rational(0));
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i) out.coeffs[j] += gamma[i] * inverse.at(i, j);
    return out;
}

std::vector<std::vector<Rational>> ObFrame::substitution_rows() const {
    const int r = inverse.rows();
    std::vector<std::vector<Rational>> rows(r, std::vector<Rational>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) rows[i][j] = inverse.at(i, j);
    return rows;
}

ObFrame ob_frame(const Arrangement& arr, const OrderedBasis& basis) {
    const int r = arr.rank();
    if (static_cast<int>(basis.size()) != r)
        throw precondition_error("ordered basis size differs from rank");
    RationalMatrix b(r, r);
    IntMatrix bi(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            b.at(i, j) = Rational(arr.form(basis[i]).coords[j]);
            bi.at(i, j) = arr.form(basis[i]).coords[j];
        }
    mpz_class d = det(bi);
    if (d == 0) throw precondition_error("index set is not a basis");
    return ObFrame{basis, jkres::inverse(std::move(b)), std::move(d)};
}

Rational iterated_residue(const Arrangement& arr, const OrderedBasis& basis,
                          const RationalFunction& f, int window_scale) {
    validate_function(arr, f);
    if (f.numerator.is_zero()) return Rational(0);
    const int r = arr.rank();
    ObFrame frame = ob_frame(arr, basis);
    auto factors = function_factors<Rational>(arr, f, frame);
    int k = f.denominator_degree();
    int d = std::max(0, f.numerator.total_degree());
    // Rest-expansions of one inverse form can deepen the pole of a
    // later one; the worst-case growth doubles per variable, so this
    // depth makes the truncated computation exact.
    int depth = k + (d + 1) * (1 << (r - 1));
    WindowSpec win(r, VarWindow{-depth, depth + 2});
    return residue_from_factors<Rational>(r, factors, win.scaled(window_scale));
}

SimpleElement jk_residue(const Arrangement& arr, const RationalFunction& f,
                         const DiagonalBasis& basis, int window_scale) {
    SimpleElement out;
    for (const auto& ob : basis.members) {
        Rational c = iterated_residue(arr, ob, f, window_scale);
        if (!c.is_zero()) {
            BasisSet key = ob;
            std::sort(key.begin(), key.end());
            out[key] = c;
        }
    }
    return out;
}

DiagonalBasis diagonal_basis(const Arrangement& arr) {
    DiagonalBasis basis;
    for (const auto& sigma : nbc_bases(arr)) basis.members.push_back(sigma);

    // The defining property: the iterated residue along each member is
    // 1 on its own simple fraction and 0 on every other member's.
    for (const auto& tau : basis.members) {
        for (const auto& sigma : basis.members) {
            RationalFunction phi;
            phi.numerator = Polynomial::constant(arr.rank(), Rational(1));
            for (int i : sigma) phi.denominator[i] = 1;
            Rational val = iterated_residue(arr, tau, phi);
            Rational expect(tau == sigma ? 1 : 0);
            if (val != expect)
                throw verification_error("diagonal basis duality check failed");
        }
    }
    return basis;
}

std::vector<BasisFractionTerm> decompose_to_basis_fractions(
    const Arrangement& arr, const std::map<int, int>& denominator) {
    RationalFunction probe;
    probe.numerator = Polynomial::constant(arr.rank(), Rational(1));
    probe.denominator = denominator;
    validate_function(arr, probe);

    const int r = arr.rank();
    std::deque<BasisFractionTerm> work;
    work.push_back({Rational(1), denominator});
    std::map<std::map<int, int>, Rational> done;

    while (!work.empty()) {
        BasisFractionTerm term = std::move(work.front());
        work.pop_front();

        // Scan the support in increasing order for the first element
        // dependent on its predecessors; solving for it identifies a
        // circuit.
        std::vector<int> indep;
        int dep = -1;
        std::vector<Rational> relation;
        for (const auto& [idx, m] : term.multiplicities) {
            if (!indep.empty()) {
                RationalMatrix a(r, static_cast<int>(indep.size()));
                for (int i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < indep.size(); ++j)
                        a.at(i, static_cast<int>(j)) = Rational(arr.form(indep[j]).coords[i]);
                std::vector<Rational> rhs(r);
                for (int i = 0; i < r; ++i) rhs[i] = Rational(arr.form(idx).coords[i]);
                if (auto c = solve(std::move(a), std::move(rhs))) {
                    dep = idx;
                    relation = *c;
                    break;
                }
            }
            indep.push_back(idx);
        }

        if (dep < 0) {
            auto [it, fresh] = done.try_emplace(term.multiplicities, term.coefficient);
            if (!fresh) it->second += term.coefficient;
            continue;
        }

        // dep = sum_j relation[j] indep[j]; the pivot is the smallest
        // circuit member, which is the first indep with a nonzero
        // coefficient (every such index precedes dep in the order).
        int pj = -1;
        for (std::size_t j = 0; j < indep.size(); ++j)
            if (!relation[j].is_zero()) {
                pj = static_cast<int>(j);
                break;
            }
        int pivot = indep[pj];
        Rational cp = relation[pj];

        // 1 = (1/cp) dep/pivot - sum_{j != pj} (relation_j/cp) indep_j/pivot
        auto emit = [&](int rho, const Rational& scale) {
            BasisFractionTerm next;
            next.coefficient = term.coefficient * scale;
            next.multiplicities = term.multiplicities;
            if (--next.multiplicities[rho] == 0) next.multiplicities.erase(rho);
            ++next.multiplicities[pivot];
            work.push_back(std::move(next));
        };
        emit(dep, cp.inverse());
        for (std::size_t j = 0; j < indep.size(); ++j)
            if (static_cast<int>(j) != pj && !relation[j].is_zero())
                emit(indep[j], -(relation[j] / cp));
    }

    std::vector<BasisFractionTerm> out;
    for (const auto& [mult, coeff] : done)
        if (!coeff.is_zero()) out.push_back({coeff, mult});
    return out;
}

} // namespace jkres
