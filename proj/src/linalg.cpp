#include "magnetic/linalg.hpp"

#include "magnetic/errors.hpp"

#include <utility>

namespace magnetic::linalg {

namespace {

// Reduced row echelon form in place; returns pivot columns among the first n_pivot_cols.
std::vector<std::size_t> rref(Matrix& m, std::size_t n_pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    Rational factor;
    for (std::size_t col = 0; col < n_pivot_cols && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && sgn(m(piv, col)) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
        Rational inv_p = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            if (sgn(m(row, c))) m(row, c) *= inv_p;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, col)) == 0) continue;
            factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (sgn(m(row, c))) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

Solution solve(const Matrix& a, const std::vector<std::vector<Rational>>& rhs) {
    std::size_t n = a.cols(), k = rhs.size();
    Matrix aug(a.rows(), n + k);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    for (std::size_t j = 0; j < k; ++j) {
        if (rhs[j].size() != a.rows()) throw UsageError("right-hand side length does not match the matrix");
        for (std::size_t r = 0; r < a.rows(); ++r) aug(r, n + j) = rhs[j][r];
    }
    auto pivots = rref(aug, n);

    Solution out;
    out.rank = pivots.size();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) out.free_columns.push_back(c);

    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t r = out.rank; r < aug.rows(); ++r) {
            if (sgn(aug(r, n + j)) != 0) {
                out.status = SolveStatus::Inconsistent;
                out.inconsistent_rhs = j;
                out.x.clear();
                return out;
            }
        }
        std::vector<Rational> x(n, Rational(0));
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, n + j);
        out.x.push_back(std::move(x));
    }
    out.status = out.free_columns.empty() ? SolveStatus::Unique : SolveStatus::Underdetermined;
    return out;
}

std::size_t rank(const Matrix& a) {
    Matrix m = a;
    return rref(m, m.cols()).size();
}

}  // namespace magnetic::linalg
