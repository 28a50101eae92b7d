#include "jkres/rational_matrix.hpp"

namespace jkres {

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw precondition_error("apply size mismatch");
    std::vector<Rational> out(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

namespace {

// Row-reduces m in place (partial pivoting on exact nonzero entries);
// the same row operations are applied to aug when given.  Returns the
// pivot column of each eliminated row.
std::vector<int> row_reduce(RationalMatrix& m, RationalMatrix* aug) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(p, j));
        if (aug)
            for (int j = 0; j < aug->cols(); ++j) std::swap(aug->at(row, j), aug->at(p, j));
        Rational inv = m.at(row, col).inverse();
        for (int j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
        if (aug)
            for (int j = 0; j < aug->cols(); ++j) aug->at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Rational f = m.at(i, col);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
            if (aug)
                for (int j = 0; j < aug->cols(); ++j) aug->at(i, j) -= f * aug->at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int rank(RationalMatrix m) { return static_cast<int>(row_reduce(m, nullptr).size()); }

RationalMatrix inverse(RationalMatrix m) {
    if (m.rows() != m.cols()) throw precondition_error("inverse of non-square matrix");
    RationalMatrix aug = RationalMatrix::identity(m.rows());
    auto pivots = row_reduce(m, &aug);
    if (static_cast<int>(pivots.size()) != m.rows())
        throw precondition_error("matrix is singular");
    return aug;
}

std::optional<std::vector<Rational>> solve(RationalMatrix m, std::vector<Rational> rhs) {
    if (static_cast<int>(rhs.size()) != m.rows()) throw precondition_error("solve size mismatch");
    RationalMatrix aug(m.rows(), 1);
    for (int i = 0; i < m.rows(); ++i) aug.at(i, 0) = rhs[i];
    auto pivots = row_reduce(m, &aug);
    int nr = static_cast<int>(pivots.size());
    // Inconsistent if a zero row of m has a nonzero rhs.
    for (int i = nr; i < m.rows(); ++i)
        if (!aug.at(i, 0).is_zero()) return std::nullopt;
    // Non-unique if some column has no pivot.
    if (nr != m.cols()) return std::nullopt;
    std::vector<Rational> x(m.cols());
    for (int i = 0; i < nr; ++i) x[pivots[i]] = aug.at(i, 0);
    return x;
}

} // namespace jkres
