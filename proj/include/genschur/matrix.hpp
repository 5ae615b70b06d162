#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "genschur/rational.hpp"

namespace genschur {

// Dense row-major matrix of exact rationals. Indexing is 0-based with the
// origin at the top-left corner; all semi-infinite objects elsewhere in the
// library are stored in this one orientation.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

    Matrix transpose() const;
    bool all_integer() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& c, const Matrix& m);

/// Exact determinant. Fraction-free Bareiss elimination when every entry is
/// an integer, plain rational elimination with first-nonzero pivoting
/// otherwise. det of the empty 0x0 matrix is 1.
Rational det(const Matrix& m);

/// Exact inverse of a triangular matrix with unit diagonal. The result has
/// the same triangularity; m * result == identity exactly.
Matrix invert_unitriangular(const Matrix& m);

/// Finite exponential sum_{k=0}^{rows-1} (t*m)^k / k! of a strictly
/// triangular (hence nilpotent) matrix.
Matrix exp_nilpotent(const Matrix& m, const Rational& t);

} // namespace genschur
