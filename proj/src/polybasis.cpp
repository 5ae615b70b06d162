#include "genschur/polybasis.hpp"

#include <string>

#include "genschur/errors.hpp"

namespace genschur {

namespace {

void require_lower_unitriangular(const Matrix& m) {
    if (!m.square()) throw shape_error("coefficient matrix must be square");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m(i, i) != 1) throw shape_error("coefficient matrix must have unit diagonal (monic)");
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != 0) throw shape_error("coefficient matrix must be lower triangular");
    }
}

Matrix upper_shift(int N) {
    Matrix u(N, N);
    for (int i = 0; i + 1 < N; ++i) u(i, i + 1) = 1;
    return u;
}

Matrix lower_shift(int N) {
    Matrix l(N, N);
    for (int i = 0; i + 1 < N; ++i) l(i + 1, i) = 1;
    return l;
}

// Validates a closed-form coefficient table against the basis regenerated
// from its recursion; the tables and the recursion matrices are independent
// inputs, so a mismatch is a hard bug.
PolyBasis checked_builtin(const char* name, const Matrix& table, const Matrix& jplus) {
    PolyBasis from_table = PolyBasis::from_coeffs(table);
    PolyBasis from_rec = PolyBasis::from_recursion(jplus);
    if (!(from_table.coeffs() == from_rec.coeffs()))
        throw std::logic_error(std::string("builtin basis table mismatch for ") + name);
    return from_table;
}

} // namespace

PolyBasis PolyBasis::monomial(int N) {
    if (N < 1) throw shape_error("truncation must be >= 1");
    return PolyBasis(N, Matrix::identity(N));
}

PolyBasis PolyBasis::from_coeffs(const Matrix& coeffs) {
    require_lower_unitriangular(coeffs);
    return PolyBasis(static_cast<int>(coeffs.rows()), coeffs);
}

PolyBasis PolyBasis::from_recursion(const Matrix& jplus) {
    if (!jplus.square()) throw shape_error("from_recursion: jplus must be square");
    int N = static_cast<int>(jplus.rows());
    if (N < 1) throw shape_error("truncation must be >= 1");
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            if (jplus(i, j) != 0)
                throw shape_error("from_recursion: jplus must be lower triangular");

    Matrix a(N, N);
    a(0, 0) = 1;
    for (int i = 0; i + 1 < N; ++i) {
        // phi_{i+1} = x*phi_i - sum_{j<=i} jplus(i,j) phi_j
        for (int c = 0; c <= i; ++c) a(i + 1, c + 1) = a(i, c);
        for (int j = 0; j <= i; ++j) {
            if (jplus(i, j) == 0) continue;
            for (int c = 0; c <= j; ++c) a(i + 1, c) -= jplus(i, j) * a(j, c);
        }
    }
    return PolyBasis(N, std::move(a));
}

Matrix sp_jplus(int N) {
    Matrix jp(N, N);
    for (int i = 1; i < N; ++i) jp(i, i - 1) = 1;
    return jp;
}

Matrix so_even_jplus(int N) {
    Matrix jp = sp_jplus(N);
    if (N >= 2) jp(1, 0) = 2;
    return jp;
}

Matrix so_odd_jplus(int N) {
    Matrix jp = sp_jplus(N);
    jp(0, 0) = -1;
    return jp;
}

PolyBasis PolyBasis::sp(int N) {
    if (N < 1) throw shape_error("truncation must be >= 1");
    Matrix a(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j <= i; ++j) {
            if ((i - j) % 2 != 0) continue;
            if (i % 2 == 0) {
                int ii = i / 2, jj = j / 2;
                a(i, j) = ((ii + jj) % 2 ? -1 : 1) * Rational(binomial(ii + jj, ii - jj));
            } else {
                int ii = (i - 1) / 2, jj = (j - 1) / 2;
                a(i, j) = ((ii + jj) % 2 ? -1 : 1) * Rational(binomial(ii + jj + 1, ii - jj));
            }
        }
    return checked_builtin("sp", a, sp_jplus(N));
}

PolyBasis PolyBasis::so_even(int N) {
    if (N < 1) throw shape_error("truncation must be >= 1");
    Matrix a(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j <= i; ++j) {
            if ((i - j) % 2 != 0) continue;
            if (i % 2 == 0) {
                int ii = i / 2, jj = j / 2;
                if (jj == 0)
                    a(i, j) = (ii == 0) ? Rational(1) : Rational((ii % 2 ? -2 : 2));
                else
                    a(i, j) = ((ii + jj) % 2 ? -1 : 1) * rat(ii, jj) *
                              Rational(binomial(ii + jj - 1, ii - jj));
            } else {
                int ii = (i - 1) / 2, jj = (j - 1) / 2;
                a(i, j) = ((ii + jj) % 2 ? -1 : 1) * rat(2 * ii + 1, 2 * jj + 1) *
                          Rational(binomial(ii + jj, ii - jj));
            }
        }
    return checked_builtin("so_even", a, so_even_jplus(N));
}

PolyBasis PolyBasis::so_odd(int N) {
    if (N < 1) throw shape_error("truncation must be >= 1");
    Matrix a(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j <= i; ++j) {
            int s;
            Integer b;
            if (i % 2 == 0 && j % 2 == 0) {
                int ii = i / 2, jj = j / 2;
                s = (ii + jj) % 2;
                b = binomial(ii + jj, ii - jj);
            } else if (i % 2 == 1 && j % 2 == 1) {
                int ii = (i - 1) / 2, jj = (j - 1) / 2;
                s = (ii + jj) % 2;
                b = binomial(ii + jj + 1, ii - jj);
            } else if (i % 2 == 0) { // i even, j odd
                int ii = i / 2, jj = (j - 1) / 2;
                s = (ii + jj + 1) % 2;
                b = binomial(ii + jj, ii - jj - 1);
            } else { // i odd, j even
                int ii = (i - 1) / 2, jj = j / 2;
                s = (ii + jj) % 2;
                b = binomial(ii + jj, ii - jj);
            }
            a(i, j) = (s ? -1 : 1) * Rational(b);
        }
    return checked_builtin("so_odd", a, so_odd_jplus(N));
}

Rational PolyBasis::evaluate(int i, const Rational& x) const {
    if (i < 0 || i >= N_)
        throw truncation_error("evaluate: polynomial index " + std::to_string(i) +
                               " outside truncation N = " + std::to_string(N_));
    Rational v = 0;
    for (int j = i; j >= 0; --j) v = v * x + coeffs_(i, j); // Horner
    return v;
}

Matrix PolyBasis::window(const std::vector<Rational>& x_values, int k) const {
    int n = static_cast<int>(x_values.size());
    if (n < 1) throw shape_error("window: need at least one evaluation point");
    if (k < 0 || n + k > N_)
        throw truncation_error("window: block k = " + std::to_string(k) +
                               " with n = " + std::to_string(n) +
                               " exceeds truncation N = " + std::to_string(N_));
    Matrix w(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) w(a, b) = evaluate(n + k - 1 - a, x_values[b]);
    return w;
}

Matrix PolyBasis::inverse_coeffs() const { return invert_unitriangular(coeffs_); }

RecursionData PolyBasis::recursion() const {
    Matrix inv = inverse_coeffs();
    RecursionData rd;
    rd.J = coeffs_ * upper_shift(N_) * inv;
    rd.Jtilde = coeffs_ * lower_shift(N_) * inv;
    return rd;
}

} // namespace genschur
