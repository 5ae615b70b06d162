#pragma once

#include <vector>

#include "genschur/matrix.hpp"
#include "genschur/partition.hpp"
#include "genschur/polybasis.hpp"
#include "genschur/rational.hpp"
#include "genschur/symfun.hpp"

namespace genschur {

/// Finite-support measure with distinct rational nodes.
struct DiscreteMeasure {
    std::vector<Rational> nodes;
    std::vector<Rational> weights;
    DiscreteMeasure(std::vector<Rational> nodes, std::vector<Rational> weights);
    Rational moment(int k) const; // sum_c w_c z_c^k
};

/// Two-variable measure on finitely many (z, w) points.
struct BiMeasure {
    struct Point {
        Rational z, w, weight;
    };
    std::vector<Point> points;
    Rational bimoment(int i, int j) const; // sum wt z^i w^j
};

/// Hankel matrix M[a][b] = m_{a+b}, indices from 0.
Matrix hankel(const DiscreteMeasure& mu, int size);

/// Matrix-model coefficient B_{lambda,n} = det(m_{l_a + b}) over the
/// particle coordinates of lambda sorted increasingly (rows a) and column
/// offsets b = 0..n-1; at lambda = (0) this is the classical Hankel
/// determinant det(m_{a+b}).
Rational B_coefficient(const DiscreteMeasure& mu, const Partition& lambda, int n);

/// (1/n!) sum over n-tuples of nodes of Delta^2(z) prod(weights) times the
/// Cauchy-expanded exponential sum_{|lambda|<=cutoff} S_lambda(t) S_lambda([z]).
/// With t empty the factor is 1 and the value is exact with no truncation.
Rational eigenvalue_sum(const DiscreteMeasure& mu, int n, const FlowVector& t, int cutoff);

Matrix bimoment(const BiMeasure& mu2, int size);

/// B_{lambda,nu,n} = det(M[l_a(lambda)][l_b(nu)]) over particle coordinates.
Rational B2_coefficient(const BiMeasure& mu2, const Partition& lambda, const Partition& nu,
                        int n);

/// Monic orthogonal polynomials p_0..p_{k-1} for the measure, by exact
/// Gram-Schmidt. Requires the leading Hankel minors det(m_{i+j})_{0..r-1} to
/// be nonzero for r <= k (degeneracy_error otherwise).
PolyBasis monic_orthogonal(const DiscreteMeasure& mu, int k);

/// Gram matrix A^t A of a coefficient matrix: the forward-constructed
/// generalized moment matrix sum_k phi_{ki} phi_{kj} at truncation.
Matrix gram_matrix(const PolyBasis& basis);

/// Minor of a symmetric "moment" matrix over particle coordinates of lambda
/// (rows) and mu (columns); the Cauchy-Binet mate of a coefficient-matrix
/// factorization.
Rational moment_minor(const Matrix& m, const Partition& lambda, const Partition& mu, int n);

} // namespace genschur
