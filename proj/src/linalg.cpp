#include "altkit/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace altkit {

namespace {

struct Echelon {
    std::vector<std::vector<Integer>> m;
    std::vector<int> pivot_cols;  // one per used row
    int cols = 0;
};

// Bareiss one-step fraction-free elimination; divisions are exact.
Echelon fraction_free_echelon(const QMatrix& q) {
    int R = q.rows(), C = q.cols();
    std::vector<std::vector<Integer>> m(static_cast<std::size_t>(R),
                                        std::vector<Integer>(static_cast<std::size_t>(C)));
    for (int r = 0; r < R; ++r) {
        Integer scale(1);
        for (int c = 0; c < C; ++c) scale = lcm(scale, Integer(denominator(q.at(r, c))));
        for (int c = 0; c < C; ++c) {
            Rational v = q.at(r, c) * Rational(scale);
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = Integer(numerator(v));
        }
    }
    Echelon e;
    e.cols = C;
    Integer prev(1);
    int row = 0;
    for (int col = 0; col < C && row < R; ++col) {
        int p = -1;
        for (int i = row; i < R; ++i)
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(row)]);
        for (int i = row + 1; i < R; ++i) {
            auto& mi = m[static_cast<std::size_t>(i)];
            const auto& mr = m[static_cast<std::size_t>(row)];
            for (int j = col + 1; j < C; ++j) {
                Integer t = mr[static_cast<std::size_t>(col)] * mi[static_cast<std::size_t>(j)] -
                            mi[static_cast<std::size_t>(col)] * mr[static_cast<std::size_t>(j)];
                mi[static_cast<std::size_t>(j)] = t / prev;
            }
            mi[static_cast<std::size_t>(col)] = 0;
        }
        prev = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        e.pivot_cols.push_back(col);
        ++row;
    }
    e.m = std::move(m);
    return e;
}

}  // namespace

int rank(const QMatrix& m) { return static_cast<int>(fraction_free_echelon(m).pivot_cols.size()); }

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& q) {
    Echelon e = fraction_free_echelon(q);
    int C = e.cols;
    int r = static_cast<int>(e.pivot_cols.size());
    std::vector<bool> is_pivot(static_cast<std::size_t>(C), false);
    for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < C; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<Rational> x(static_cast<std::size_t>(C), Rational(0));
        x[static_cast<std::size_t>(f)] = 1;
        for (int i = r - 1; i >= 0; --i) {
            int pc = e.pivot_cols[static_cast<std::size_t>(i)];
            Rational s(0);
            const auto& row = e.m[static_cast<std::size_t>(i)];
            for (int j = pc + 1; j < C; ++j)
                if (x[static_cast<std::size_t>(j)] != 0)
                    s += Rational(row[static_cast<std::size_t>(j)]) * x[static_cast<std::size_t>(j)];
            x[static_cast<std::size_t>(pc)] = -s / Rational(row[static_cast<std::size_t>(pc)]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<int> independent_subset(const std::vector<std::vector<Rational>>& vectors) {
    std::vector<int> chosen;
    if (vectors.empty()) return chosen;
    std::size_t dim = vectors.front().size();
    int current_rank = 0;
    for (int i = 0; i < static_cast<int>(vectors.size()); ++i) {
        if (vectors[static_cast<std::size_t>(i)].size() != dim)
            throw std::invalid_argument("vector length mismatch");
        QMatrix m(static_cast<int>(chosen.size()) + 1, static_cast<int>(dim));
        for (int r = 0; r < static_cast<int>(chosen.size()); ++r)
            for (int c = 0; c < static_cast<int>(dim); ++c)
                m.at(r, c) = vectors[static_cast<std::size_t>(chosen[static_cast<std::size_t>(r)])]
                                    [static_cast<std::size_t>(c)];
        for (int c = 0; c < static_cast<int>(dim); ++c)
            m.at(static_cast<int>(chosen.size()), c) =
                vectors[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
        if (rank(m) > current_rank) {
            chosen.push_back(i);
            ++current_rank;
        }
    }
    return chosen;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    int n = m.rows();
    // Gauss-Jordan on [m | I], exact over the rationals.
    QMatrix w(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) w.at(r, c) = m.at(r, c);
        w.at(r, n + r) = 1;
    }
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i)
            if (w.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) return std::nullopt;
        if (p != col)
            for (int c = 0; c < 2 * n; ++c) std::swap(w.at(p, c), w.at(col, c));
        Rational piv = w.at(col, col);
        for (int c = 0; c < 2 * n; ++c) w.at(col, c) /= piv;
        for (int i = 0; i < n; ++i) {
            if (i == col || w.at(i, col) == 0) continue;
            Rational f = w.at(i, col);
            for (int c = 0; c < 2 * n; ++c) w.at(i, c) -= f * w.at(col, c);
        }
    }
    QMatrix out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out.at(r, c) = w.at(r, n + c);
    return out;
}

}  // namespace altkit
