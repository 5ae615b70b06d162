#pragma once

#include <map>
#include <vector>

#include "genschur/matrix.hpp"
#include "genschur/partition.hpp"
#include "genschur/polybasis.hpp"

namespace genschur {

/// Evaluation point: pairwise distinct rationals (nonzero Vandermonde).
/// Throws singular_error on a repeated value.
void require_distinct(const std::vector<Rational>& x);

/// Vandermonde product prod_{i<j} (x_i - x_j); equals det(window(x, 0)) for
/// any monic basis.
Rational vandermonde(const std::vector<Rational>& x);

/// Finitely supported symmetric function in the Schur basis, keyed in
/// canonical partition order.
using SchurExpansion = std::map<Partition, Rational, PartitionOrder>;

/// Generalized Schur polynomial S^phi_{lambda,n}(x) = det(Phi_lambda)/det(Phi(0)):
/// the lambda-minor takes rows phi_{l_a}, l_a = lambda_a - a + n - 1 (0-based,
/// strictly decreasing). Requires length(lambda) <= n and N >= lambda_1 + n.
Rational bialternant(const PolyBasis& basis, const Partition& lambda,
                     const std::vector<Rational>& x);

/// Classical Schur polynomial at distinct rational points (monomial-basis
/// bialternant).
Rational classical_schur(const Partition& lambda, const std::vector<Rational>& x);

/// Minor coefficients phi^(n)_{lambda mu} = det(coeff(l_i, m_j)) over the
/// particle coordinates of lambda (rows) and mu (columns). Support satisfies
/// mu <= lambda pointwise; entries with value zero are dropped.
SchurExpansion expansion_coeffs(const PolyBasis& basis, const Partition& lambda, int n);

// Grid of generalized complete symmetric functions h^{(j)}_m. Column j = 0
// holds h^{(0)}_m = S^phi_{(m)} (zero for m < 0, one for m = 0); upward
// columns follow h^{(j+1)} = J h^{(j)} (entry at subscript m combines row
// m + n - 1 of J with the previous column), downward columns h^{(j-1)} =
// Jtilde h^{(j)}. Stored superscripts j in [sup_lo, sup_hi], subscripts m in
// [1-n, max_m].
class HMatrix {
public:
    int n() const { return n_; }
    int sup_lo() const { return sup_lo_; }
    int sup_hi() const { return sup_hi_; }
    int max_m() const { return max_m_; }
    const Rational& h(int sup, int m) const;

private:
    friend HMatrix build_H(const PolyBasis&, const std::vector<Rational>&, int, int, int);
    int n_, sup_lo_, sup_hi_, max_m_;
    std::vector<std::vector<Rational>> cols_;
};

/// Requires N >= max_m + n + sup_hi (column 0 is built sup_hi rows deeper and
/// each upward recursion step consumes one row).
HMatrix build_H(const PolyBasis& basis, const std::vector<Rational>& x, int max_m,
                int sup_hi, int sup_lo = 0);

// Grid of generalized elementary symmetric functions: the rows E_(i) of
// E = E0 (A^phi)^{-1}, where E0_(i)^j = (-1)^{n-i-j+1} e_{n-i-j+1} over the
// classical elementary e's of x. Row labels i run from n down to row_lo,
// column index j = 1..width. The accessor gen_elementary unwinds the sign
// convention: e^m_(s) = (-1)^{s+m} E_(-s)^{n-m+1}.
class EMatrix {
public:
    int n() const { return n_; }
    int row_lo() const { return row_lo_; }
    int width() const { return width_; }
    const Rational& entry(int i, int j) const; // E_(i)^j
    Rational gen_elementary(int m, int s) const;

private:
    friend EMatrix build_E(const PolyBasis&, const std::vector<Rational>&, int, int);
    int n_, row_lo_, width_;
    std::vector<std::vector<Rational>> rows_;
};

/// Requires N >= n - row_lo + 1 and N >= width.
EMatrix build_E(const PolyBasis& basis, const std::vector<Rational>& x, int row_lo,
                int width);

/// S^phi_lambda = det(h^{(j)}_{lambda_i - i}) over 0-based i, j < length(lambda).
Rational jacobi_trudi(const PolyBasis& basis, const Partition& lambda,
                      const std::vector<Rational>& x);

/// S^phi_lambda = det(e^{lambda'_j - j}_{(i)}) over 0-based i, j < length(lambda').
Rational dual_jacobi_trudi(const PolyBasis& basis, const Partition& lambda,
                           const std::vector<Rational>& x);

/// S^phi_lambda = det(S^phi_{(a_i|b_j)}) over the Frobenius hooks of lambda.
Rational giambelli(const PolyBasis& basis, const Partition& lambda,
                   const std::vector<Rational>& x);

struct FourRoutes {
    Rational bialternant, jacobi_trudi, dual, giambelli;
    bool agree;
};
FourRoutes four_routes(const PolyBasis& basis, const Partition& lambda,
                       const std::vector<Rational>& x);

// Plucker coordinate family of one Grassmannian element. Keys absent from
// the map but inside the declared support are exact zeros; looking up a key
// outside the support is an incomplete_family_error.
struct CoordFamily {
    std::map<Partition, Rational, PartitionOrder> coords;
    int max_weight = 0;
    int max_length = 0;
    Rational at(const Partition& p) const;
};

/// Giambelli form of the Plucker relations: true iff
/// pi_0^{r-1} pi_lambda == det(pi_{(a_i|b_j)}) exactly, r = Frobenius rank.
bool pluecker_check(const CoordFamily& family, const Partition& lambda);

// --- identity checks over explicitly requested windows -------------------

/// Phi(k) X - Jplus(k) Phi(k) - Phi(k+1), the exact residual of the
/// projected recursion on the k-th window.
Matrix window_recursion_residual(const PolyBasis& basis, const std::vector<Rational>& x, int k);

/// Contribution escaping the k-th window: entry (a, b) =
/// sum_{j<k} Jplus(m, j) phi_j(x_b) with m = k + n - 1 - a. The residual
/// equals this boundary term exactly; it vanishes when k = 0 or when Jplus
/// has no support left of column k in the window rows.
Matrix window_recursion_boundary(const PolyBasis& basis, const std::vector<Rational>& x, int k);

/// H H(0)^{-1} = Phi Phi(0)^{-1} checked as H (H(0)^{-1} Phi(0)) == Phi on
/// rows 0..depth-1 (depth >= n).
bool check_grassmannian(const PolyBasis& basis, const std::vector<Rational>& x, int depth);

/// H = A^phi H0 (monomial grid dressed by the coefficient matrix), checked
/// entrywise on rows 0..depth-1.
bool check_h_dressing(const PolyBasis& basis, const std::vector<Rational>& x, int depth);

/// (E H)_{(i), j} == delta_{ij} for i in [i_lo, n], j in [1, n].
bool check_eh_identity(const PolyBasis& basis, const std::vector<Rational>& x, int i_lo);

/// (H E)_{i, j} == delta_{ij} for rows/columns 1..i_max (needs the
/// Jtilde-extended columns of H).
bool check_he_identity(const PolyBasis& basis, const std::vector<Rational>& x, int i_max);

/// sum_mu phi^(n)_{lambda mu} S_mu(x) == S^phi_{lambda,n}(x).
bool check_cauchy_binet(const PolyBasis& basis, const Partition& lambda,
                        const std::vector<Rational>& x);

} // namespace genschur
