#pragma once

#include "magnetic/rational.hpp"

#include <vector>

namespace magnetic::linalg {

class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct Solution {
    SolveStatus status = SolveStatus::Unique;
    std::size_t rank = 0;
    std::vector<std::size_t> free_columns;
    // One solution vector per right-hand side; free variables set to zero.
    std::vector<std::vector<Rational>> x;
    // Index of the first right-hand side that is inconsistent, if any.
    std::size_t inconsistent_rhs = 0;
};

// Exact Gauss-Jordan elimination on [A | B], B given column by column.
Solution solve(const Matrix& a, const std::vector<std::vector<Rational>>& rhs);
std::size_t rank(const Matrix& a);

}  // namespace magnetic::linalg
