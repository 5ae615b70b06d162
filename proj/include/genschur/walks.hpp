#pragma once

#include <map>
#include <vector>

#include "genschur/matrix.hpp"
#include "genschur/partition.hpp"
#include "genschur/rational.hpp"

namespace genschur {

// Dense polynomial in the time variable t, exact coefficients.
struct TimePoly {
    std::vector<Rational> c; // c[k] = coefficient of t^k

    int degree() const;
    void trim();
    Rational eval(const Rational& t) const;
    TimePoly derivative() const;
    bool operator==(const TimePoly& o) const;
};

TimePoly operator+(const TimePoly& a, const TimePoly& b);
TimePoly operator-(const TimePoly& a, const TimePoly& b);
TimePoly operator*(const TimePoly& a, const TimePoly& b);

/// Hop rates r_1..r_{N-1} (site i-1 -> i), all positive; states live on
/// particle coordinates 0..N-1.
struct RateSpec {
    std::vector<Rational> rates;
    explicit RateSpec(std::vector<Rational> r);
    int truncation() const { return static_cast<int>(rates.size()) + 1; }
    Rational rate(int i) const { return rates[i - 1]; } // 1-based band index
};

/// Strictly lower triangular N x N rate matrix with rate(b+1) at (b+1, b).
Matrix generator(const RateSpec& r);

/// Continuous-time weight W_{mu -> lambda}(t): n x n minor of exp(t * alpha)
/// at rows l(lambda), columns l(mu). Unnormalized.
Rational transition_weight(const RateSpec& r, const Partition& lambda, const Partition& mu,
                           int n, const Rational& t);

/// Same minor kept as an exact polynomial in t.
TimePoly transition_weight_poly(const RateSpec& r, const Partition& lambda,
                                const Partition& mu, int n);

/// One-step generator entry M_{lambda nu}: rate of the single right hop
/// turning nu into lambda, zero unless lambda = nu + one box.
Rational one_step_rate(const RateSpec& r, const Partition& lambda, const Partition& nu,
                       int n);

/// Verifies d/dt W_{mu->lambda}(t) = sum_nu M_{lambda nu} W_{mu->nu}(t) as an
/// exact polynomial identity (and hence at the given t).
bool semigroup_check(const RateSpec& r, const Partition& lambda, const Partition& mu, int n,
                     const Rational& t);

/// Partitions reachable from mu within the truncation: mu <= lambda
/// pointwise, length <= n, top particle coordinate < N. Canonical order.
std::vector<Partition> reachable_states(const RateSpec& r, const Partition& mu, int n,
                                        int max_extra_weight);

struct DiscreteWeights {
    std::map<Partition, Rational, PartitionOrder> weights;
    bool absorbing = false; // no state reachable in exactly `steps` hops
};

/// Order-`steps` term of the expansion as a discrete-time process,
/// normalized over the reachable final states.
DiscreteWeights discrete_time_weights(const RateSpec& r, const Partition& mu, int n,
                                      int steps);

} // namespace genschur
