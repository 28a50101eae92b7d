#pragma once

#include <optional>
#include <vector>

#include "jkres/rational.hpp"

namespace jkres {

// Dense matrix over Rational, for exact linear solves of small systems.
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static RationalMatrix identity(int n) {
        RationalMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return e_[i * cols_ + j]; }
    const Rational& at(int i, int j) const { return e_[i * cols_ + j]; }

    std::vector<Rational> apply(const std::vector<Rational>& v) const;

private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

int rank(RationalMatrix m);

// Exact inverse; throws precondition_error if singular.
RationalMatrix inverse(RationalMatrix m);

// Solves m x = rhs for square nonsingular m, or general m when the
// system is consistent and has a unique solution; nullopt otherwise.
std::optional<std::vector<Rational>> solve(RationalMatrix m, std::vector<Rational> rhs);

} // namespace jkres
