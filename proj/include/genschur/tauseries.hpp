#pragma once

#include <map>
#include <utility>

#include "genschur/partition.hpp"
#include "genschur/polybasis.hpp"
#include "genschur/schurgen.hpp"
#include "genschur/symfun.hpp"

namespace genschur {

// Truncated tau-function coefficient table: phi^(n)_{lambda mu} over all
// lambda with |lambda| <= cutoff, length <= n, and mu inside lambda.
struct TauSeries {
    int n = 0;
    int cutoff = 0;
    std::map<std::pair<Partition, Partition>, Rational,
             bool (*)(const std::pair<Partition, Partition>&,
                      const std::pair<Partition, Partition>&)>
        coefficients;
};

TauSeries tau_coefficients(const PolyBasis& basis, int n, int cutoff);

struct TauValue {
    Rational value;
    long terms; // number of nonzero terms in the truncated sum
};

/// tau_phi(n, t, s) = sum_{|lambda|<=cutoff} sum_mu phi^(n)_{lambda mu}
/// S_lambda(t) S_mu(s), exact truncated sum.
TauValue tau_phi(const PolyBasis& basis, int n, const FlowVector& t, const FlowVector& s,
                 int cutoff);

/// tau_{phi,theta}(n, t, s) = sum_{|lambda|<=cutoff} S^phi_{lambda,n}(s)
/// S^theta_{lambda,n}(t), both factors expanded through the coefficient
/// minors and classical Schur functions of the flow variables.
TauValue tau_pair(const PolyBasis& phi, const PolyBasis& theta, int n, const FlowVector& t,
                  const FlowVector& s, int cutoff);

/// Giambelli form of the Plucker relations for the family
/// {phi^(n)_{lambda mu}}_mu at the test partition lambda itself.
bool kp_coefficient_check(const PolyBasis& basis, int n, const Partition& lambda);

} // namespace genschur
