#include "jkres/int_matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace jkres {

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<long>>& cols) {
    if (cols.empty()) throw precondition_error("matrix with no columns");
    IntMatrix m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
        if (static_cast<int>(cols[j].size()) != m.rows())
            throw precondition_error("ragged column list");
        for (int i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

void IntMatrix::swap_columns(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::negate_column(int j) {
    for (int i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
}

void IntMatrix::submul_column(int q, int p, const mpz_class& t) {
    if (t == 0) return;
    for (int i = 0; i < rows_; ++i) at(i, q) -= t * at(i, p);
}

mpz_class det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw precondition_error("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a.at(i, j) = v;
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

IntMatrix column_echelon(IntMatrix m) {
    if (m.rows() != m.cols()) throw precondition_error("echelon form needs a square matrix");
    const int n = m.rows();
    for (int i = 0; i < n; ++i) {
        // Euclid on row i across columns i..n-1 until one nonzero entry remains.
        for (;;) {
            int nonzero = -1, second = -1;
            for (int j = i; j < n; ++j)
                if (m.at(i, j) != 0) {
                    if (nonzero < 0)
                        nonzero = j;
                    else {
                        second = j;
                        break;
                    }
                }
            if (nonzero < 0) throw precondition_error("singular matrix has no echelon box");
            if (second < 0) {
                m.swap_columns(i, nonzero);
                break;
            }
            int p = nonzero;
            for (int j = second; j < n; ++j)
                if (m.at(i, j) != 0 && abs(m.at(i, j)) < abs(m.at(i, p))) p = j;
            for (int j = i; j < n; ++j) {
                if (j == p || m.at(i, j) == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), m.at(i, j).get_mpz_t(), m.at(i, p).get_mpz_t());
                m.submul_column(j, p, q);
            }
        }
        if (m.at(i, i) < 0) m.negate_column(i);
        // Below-diagonal entries are left unreduced; only the
        // triangular shape and the diagonal matter here.
    }
    return m;
}

bool echelon_contains(const IntMatrix& echelon, std::vector<mpz_class> v) {
    const int n = echelon.rows();
    for (int i = 0; i < n; ++i) {
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v[i].get_mpz_t(),
                    echelon.at(i, i).get_mpz_t());
        if (r != 0) return false;
        for (int k = i; k < n; ++k) v[k] -= q * echelon.at(k, i);
    }
    for (int i = 0; i < n; ++i)
        if (v[i] != 0) return false;
    return true;
}

CosetReps coset_representatives(const IntMatrix& sigma) {
    IntMatrix h = column_echelon(sigma);
    const int n = h.rows();
    mpz_class index = 1;
    std::vector<long> dims(n);
    for (int i = 0; i < n; ++i) {
        index *= h.at(i, i);
        if (!h.at(i, i).fits_slong_p())
            throw precondition_error("sublattice index too large to enumerate");
        dims[i] = h.at(i, i).get_si();
    }
    CosetReps out;
    out.index = index;
    std::vector<long> v(n, 0);
    for (;;) {
        out.representatives.push_back(v);
        int j = n - 1;
        while (j >= 0 && v[j] + 1 == dims[j]) v[j--] = 0;
        if (j < 0) break;
        ++v[j];
    }
    return out;
}

} // namespace jkres
