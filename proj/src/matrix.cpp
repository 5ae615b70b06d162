#include "genschur/matrix.hpp"

#include <utility>

#include "genschur/errors.hpp"

namespace genschur {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw dimension_error("ragged row list in Matrix::from_rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::all_integer() const {
    for (const Rational& q : data_)
        if (!is_integer(q)) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw dimension_error("matrix product shape mismatch");
    Matrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) r(i, j) += aik * b(k, j);
        }
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error("matrix sum shape mismatch");
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error("matrix difference shape mismatch");
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

Matrix operator*(const Rational& c, const Matrix& m) {
    Matrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = c * m(i, j);
    return r;
}

namespace {

Rational det_bareiss(const Matrix& m) {
    std::size_t n = m.rows();
    std::vector<Integer> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).get_num();

    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p * n + k] == 0) ++p;
        if (p == n) return Rational(0);
        if (p != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a[p * n + j], a[k * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
                mpz_divexact(a[i * n + j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }
    Integer d = a[(n - 1) * n + (n - 1)];
    if (sign < 0) d = -d;
    return Rational(d);
}

Rational det_rational(Matrix m) {
    std::size_t n = m.rows();
    Rational d = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) return Rational(0);
        if (p != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m(p, j), m(k, j));
            d = -d;
        }
        d *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            Rational f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return d;
}

} // namespace

Rational det(const Matrix& m) {
    if (!m.square()) throw dimension_error("determinant of non-square matrix");
    if (m.rows() == 0) return Rational(1);
    if (m.all_integer()) return det_bareiss(m);
    return det_rational(m);
}

Matrix invert_unitriangular(const Matrix& m) {
    if (!m.square()) throw dimension_error("invert_unitriangular: non-square matrix");
    std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i)
        if (m(i, i) != 1) throw shape_error("invert_unitriangular: diagonal entry != 1");

    bool lower = true, upper = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i < j && m(i, j) != 0) lower = false;
            if (i > j && m(i, j) != 0) upper = false;
        }
    if (!lower && !upper) throw shape_error("invert_unitriangular: matrix is not triangular");

    // Forward substitution column by column; lower case shown, upper case is
    // the transpose of the same computation.
    if (upper && !lower) return invert_unitriangular(m.transpose()).transpose();
    Matrix inv = Matrix::identity(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = j + 1; i < n; ++i) {
            Rational s = 0;
            for (std::size_t k = j; k < i; ++k)
                if (m(i, k) != 0) s += m(i, k) * inv(k, j);
            inv(i, j) = -s;
        }
    return inv;
}

Matrix exp_nilpotent(const Matrix& m, const Rational& t) {
    if (!m.square()) throw dimension_error("exp_nilpotent: non-square matrix");
    std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i)
        if (m(i, i) != 0) throw shape_error("exp_nilpotent: nonzero diagonal, matrix not nilpotent");
    bool lower = true, upper = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i < j && m(i, j) != 0) lower = false;
            if (i > j && m(i, j) != 0) upper = false;
        }
    if (!lower && !upper)
        throw shape_error("exp_nilpotent: matrix is not strictly triangular");

    Matrix result = Matrix::identity(n);
    Matrix power = Matrix::identity(n);
    Matrix tm = t * m;
    Integer kfact = 1;
    for (std::size_t k = 1; k < n; ++k) {
        power = power * tm;
        kfact *= static_cast<long>(k);
        result = result + (Rational(1) / Rational(kfact)) * power;
    }
    return result;
}

} // namespace genschur
