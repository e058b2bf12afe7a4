#pragma once

#include <optional>
#include <vector>

#include "altkit/rational.hpp"

namespace altkit {

/// Dense matrix over exact rationals, row major. Only the handful of
/// operations the cohomology and morphism checks need.
class QMatrix {
public:
    QMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return a_[index(r, c)]; }
    const Rational& at(int r, int c) const { return a_[index(r, c)]; }

private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }
    int rows_, cols_;
    std::vector<Rational> a_;
};

/// Rank via fraction-free (Bareiss) elimination on a denominator-cleared copy.
int rank(const QMatrix& m);

/// Basis of the right kernel {x : m x = 0}, one vector per free column,
/// in ascending free-column order.
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m);

/// Indices of a maximal linearly independent subset of the given
/// vectors, scanned left to right.
std::vector<int> independent_subset(const std::vector<std::vector<Rational>>& vectors);

/// Inverse of a square matrix; nullopt when singular.
std::optional<QMatrix> inverse(const QMatrix& m);

}  // namespace altkit
