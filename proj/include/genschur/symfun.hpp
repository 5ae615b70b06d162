#pragma once

#include <map>
#include <vector>

#include "genschur/partition.hpp"
#include "genschur/rational.hpp"

namespace genschur {

/// Flow variables t = (t_1..t_K), implicitly zero beyond K.
using FlowVector = std::vector<Rational>;

/// t_i = (1/i) sum_a x_a^i for i = 1..K.
FlowVector monomial_sums(const std::vector<Rational>& x, int K);

/// Complete symmetric function h_k(t) by the Newton recurrence
/// k h_k = sum_{i=1}^{k} (i t_i) h_{k-i}, h_0 = 1.
Rational complete_h(const FlowVector& t, int k);
std::vector<Rational> complete_h_upto(const FlowVector& t, int kmax);

/// Classical Schur function S_lambda(t) = det(h_{lambda_i - i + j}).
Rational schur_t(const Partition& lambda, const FlowVector& t);

/// Littlewood-Richardson coefficient C^lambda_{mu nu} by brute force:
/// multiply the exact monomial expansions of S_mu and S_nu in length(lambda)
/// variables and re-expand in the Schur basis. Weights above max_weight are
/// rejected (desk-scale guard).
long littlewood_richardson(const Partition& mu, const Partition& nu,
                           const Partition& lambda, int max_weight = 8);

// Exact monomial expansion machinery, exposed for tests. A polynomial in
// nvars variables is a map from exponent vectors (length nvars) to
// coefficients; schur_monomials enumerates semistandard tableaux.
using Exponents = std::vector<int>;
using MonomialPoly = std::map<Exponents, Rational>;

MonomialPoly schur_monomials(const Partition& lambda, int nvars);
MonomialPoly mul(const MonomialPoly& a, const MonomialPoly& b);
std::map<Partition, Rational, PartitionOrder> to_schur_basis(MonomialPoly p, int nvars);

} // namespace genschur
