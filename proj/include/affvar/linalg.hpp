#pragma once

#include "affvar/field.hpp"

#include <vector>

namespace affvar {

/// Dense row-major matrix over F_q.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::vector<Element> row(std::size_t r) const;

    Matrix transpose() const;
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Element> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(const Field& f, Matrix& m);
std::size_t rank(const Field& f, Matrix m);
/// Basis of {x : m x = 0}, one vector per row of the result.
Matrix nullspace(const Field& f, Matrix m);
Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);

} // namespace affvar
