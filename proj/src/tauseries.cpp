#include "genschur/tauseries.hpp"

#include "genschur/errors.hpp"

namespace genschur {

namespace {

bool pair_order(const std::pair<Partition, Partition>& a,
                const std::pair<Partition, Partition>& b) {
    PartitionOrder less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
}

} // namespace

TauSeries tau_coefficients(const PolyBasis& basis, int n, int cutoff) {
    if (n < 1) throw shape_error("tau series: n must be >= 1");
    if (cutoff + n > basis.truncation())
        throw truncation_error("tau series: need truncation N >= " +
                               std::to_string(cutoff + n));
    TauSeries ts{n, cutoff, decltype(TauSeries::coefficients)(pair_order)};
    for (const Partition& lambda : enumerate_partitions(cutoff, n))
        for (const auto& [mu, c] : expansion_coeffs(basis, lambda, n))
            ts.coefficients.emplace(std::make_pair(lambda, mu), c);
    return ts;
}

TauValue tau_phi(const PolyBasis& basis, int n, const FlowVector& t, const FlowVector& s,
                 int cutoff) {
    TauSeries ts = tau_coefficients(basis, n, cutoff);
    Rational v = 0;
    long terms = 0;
    for (const auto& [key, c] : ts.coefficients) {
        v += c * schur_t(key.first, t) * schur_t(key.second, s);
        ++terms;
    }
    return {v, terms};
}

TauValue tau_pair(const PolyBasis& phi, const PolyBasis& theta, int n, const FlowVector& t,
                  const FlowVector& s, int cutoff) {
    if (n < 1) throw shape_error("tau series: n must be >= 1");
    if (cutoff + n > phi.truncation() || cutoff + n > theta.truncation())
        throw truncation_error("tau series: need truncation N >= " +
                               std::to_string(cutoff + n) + " in both bases");
    Rational v = 0;
    long terms = 0;
    for (const Partition& lambda : enumerate_partitions(cutoff, n)) {
        Rational sphi = 0, stheta = 0;
        for (const auto& [mu, c] : expansion_coeffs(phi, lambda, n))
            sphi += c * schur_t(mu, s);
        for (const auto& [mu, c] : expansion_coeffs(theta, lambda, n))
            stheta += c * schur_t(mu, t);
        if (sphi != 0 && stheta != 0) {
            v += sphi * stheta;
            ++terms;
        }
    }
    return {v, terms};
}

bool kp_coefficient_check(const PolyBasis& basis, int n, const Partition& lambda) {
    if (lambda.length() > n)
        throw length_error("kp_coefficient_check: partition length exceeds n");
    CoordFamily family;
    family.max_weight = lambda.weight();
    family.max_length = n;
    family.coords = expansion_coeffs(basis, lambda, n);
    return pluecker_check(family, lambda);
}

} // namespace genschur
