#pragma once

#include <gmpxx.h>

#include <vector>

#include "jkres/errors.hpp"

namespace jkres {

// Dense matrix over arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    // Columns are the given vectors.
    static IntMatrix from_columns(const std::vector<std::vector<long>>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpz_class& at(int i, int j) { return e_[i * cols_ + j]; }
    const mpz_class& at(int i, int j) const { return e_[i * cols_ + j]; }

    void swap_columns(int a, int b);
    void negate_column(int j);
    // col_q -= t * col_p
    void submul_column(int q, int p, const mpz_class& t);

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    int rows_, cols_;
    std::vector<mpz_class> e_;
};

// Fraction-free (Bareiss) determinant.  Exact divisions only.
mpz_class det(const IntMatrix& m);

// Lower-triangular column echelon form with positive diagonal; the
// columns span the same sublattice as the input's.  Requires full
// column rank (square, nonsingular).
IntMatrix column_echelon(IntMatrix m);

// True if v lies in the sublattice spanned by the columns of the
// echelon form returned by column_echelon.
bool echelon_contains(const IntMatrix& echelon, std::vector<mpz_class> v);

struct CosetReps {
    std::vector<std::vector<long>> representatives; // lexicographic order
    mpz_class index;                                // |det|, == representatives.size()
};

// Coset representatives of Z^r modulo the sublattice spanned by the
// columns of sigma: the half-open box of the echelon diagonal.
CosetReps coset_representatives(const IntMatrix& sigma);

} // namespace jkres
