#pragma once

#include <vector>

#include "genschur/matrix.hpp"
#include "genschur/rational.hpp"

namespace genschur {

// Recursion data for a monic polynomial system.
//
// J encodes multiplication by x: row i lists the expansion coefficients of
// x*phi_i in the basis, so x*phi_i = phi_{i+1} + sum_{j<=i} Jplus(i,j) phi_j
// and J = U + Jplus with U the upper shift (U(i,i+1) = 1) and Jplus lower
// triangular (diagonal allowed). Jtilde = A L A^{-1} (L the lower shift) is
// a right inverse of J. At truncation N, J is exact on rows 0..N-2 (the last
// row is lost to truncation); Jtilde is exact on all rows and is strictly
// lower triangular.
struct RecursionData {
    Matrix J;
    Matrix Jtilde;
};

// Monic polynomial system phi = {phi_0, phi_1, ...}, deg phi_i = i, held as
// its truncated coefficient matrix: coeff(i, j) is the coefficient of x^j in
// phi_i, so the N x N matrix is lower unitriangular.
class PolyBasis {
public:
    static PolyBasis monomial(int N);
    static PolyBasis sp(int N);       // symplectic system in z = x + 1/x
    static PolyBasis so_even(int N);  // even orthogonal system in z
    static PolyBasis so_odd(int N);   // odd orthogonal system in z

    /// Build from the recursion x*phi_i = phi_{i+1} + sum_{j<=i} jplus(i,j) phi_j.
    /// jplus must be square and lower triangular (diagonal allowed).
    static PolyBasis from_recursion(const Matrix& jplus);

    /// Adopt an explicit lower-unitriangular coefficient matrix.
    static PolyBasis from_coeffs(const Matrix& coeffs);

    int truncation() const { return N_; }
    const Matrix& coeffs() const { return coeffs_; }
    const Rational& coeff(int i, int j) const { return coeffs_(i, j); }

    /// phi_i(x). Throws truncation_error for i >= N.
    Rational evaluate(int i, const Rational& x) const;

    /// n x n window with row a = phi_{n+k-1-a} evaluated at the x values
    /// (top row is the highest-degree polynomial). Requires n + k <= N.
    Matrix window(const std::vector<Rational>& x_values, int k) const;

    /// Exact J and Jtilde on the truncation; see RecursionData for the
    /// validity windows.
    RecursionData recursion() const;

    Matrix inverse_coeffs() const; // exact inverse of the coefficient matrix

private:
    PolyBasis(int N, Matrix coeffs) : N_(N), coeffs_(std::move(coeffs)) {}
    int N_;
    Matrix coeffs_;
};

/// Correction part of the recursion, x*phi_i - phi_{i+1} expanded in the
/// basis, for the built-in systems (rows/cols 0-based).
Matrix sp_jplus(int N);
Matrix so_even_jplus(int N);
Matrix so_odd_jplus(int N);

} // namespace genschur
