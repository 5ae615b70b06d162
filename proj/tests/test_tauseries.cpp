#include <doctest.h>

#include "genschur/errors.hpp"
#include "genschur/tauseries.hpp"
#include "genschur/verify.hpp"

using namespace genschur;

TEST_SUITE("tauseries") {

TEST_CASE("tau_phi base values") {
    PolyBasis mono = PolyBasis::monomial(9);
    FlowVector zero;
    CHECK(tau_phi(mono, 2, zero, zero, 4).value == 1); // phi_{(0),(0)} = 1

    // Monomial coefficients are Kronecker deltas, so with s = 0 only the
    // empty partition survives.
    FlowVector t{rat(1), rat(1, 2), rat(2)};
    CHECK(tau_phi(mono, 2, t, zero, 5).value == 1);

    // Symplectic n = 1, s = 0, t = (1): 1 + phi_{(2),(0)} S_(2)(t) = 1/2.
    PolyBasis sp = PolyBasis::sp(6);
    FlowVector t1{rat(1)};
    CHECK(tau_phi(sp, 1, t1, zero, 2).value == rat(1, 2));

    CHECK_THROWS_AS(tau_phi(sp, 1, t1, zero, 9), truncation_error);
}

TEST_CASE("tau coefficient table is canonically ordered") {
    TauSeries ts = tau_coefficients(PolyBasis::sp(8), 2, 4);
    CHECK(ts.n == 2);
    CHECK(ts.cutoff == 4);
    PartitionOrder less;
    const Partition* prev = nullptr;
    for (const auto& [key, c] : ts.coefficients) {
        CHECK(c != 0);
        CHECK(key.second.weight() <= key.first.weight());
        if (prev) CHECK(!less(key.first, *prev));
        prev = &key.first;
    }
}

TEST_CASE("tau_pair reduces to tau_phi against the monomial system") {
    PolyBasis sp = PolyBasis::sp(9);
    PolyBasis mono = PolyBasis::monomial(9);
    FlowVector t{rat(1, 2), rat(1, 3)};
    FlowVector s{rat(2), rat(0), rat(1, 5)};
    for (int n : {1, 2})
        for (int cutoff : {0, 2, 4})
            CHECK(tau_pair(sp, mono, n, t, s, cutoff).value ==
                  tau_phi(sp, n, t, s, cutoff).value);
}

TEST_CASE("cutoff growth adds only higher-weight terms") {
    PolyBasis so = PolyBasis::so_odd(10);
    FlowVector t{rat(1, 2), rat(1, 3)};
    FlowVector s{rat(1, 5)};
    Rational prev = tau_phi(so, 2, t, s, 0).value;
    for (int cutoff = 1; cutoff <= 4; ++cutoff) {
        Rational cur = tau_phi(so, 2, t, s, cutoff).value;
        Rational diff = 0;
        for (const Partition& lam : enumerate_partitions(cutoff, 2)) {
            if (lam.weight() != cutoff) continue;
            for (const auto& [mu, c] : expansion_coeffs(so, lam, 2))
                diff += c * schur_t(lam, t) * schur_t(mu, s);
        }
        CHECK(cur - prev == diff);
        prev = cur;
    }
}

TEST_CASE("double-sum route matches the evaluated-factor route") {
    // With s the monomial sums of a concrete point, the inner sum over mu
    // collapses to the bialternant value.
    PolyBasis sp = PolyBasis::sp(10);
    int n = 2, cutoff = 5;
    std::vector<Rational> x = seeded_point(n, 0, 1);
    FlowVector s = monomial_sums(x, cutoff + 1);
    FlowVector t{rat(1, 3), rat(2, 7), rat(1)};
    Rational direct = tau_phi(sp, n, t, s, cutoff).value;
    Rational factored = 0;
    for (const Partition& lam : enumerate_partitions(cutoff, n))
        factored += bialternant(sp, lam, x) * schur_t(lam, t);
    CHECK(direct == factored);
}

TEST_CASE("s = 0 keeps only the mu = (0) column") {
    PolyBasis soe = PolyBasis::so_even(10);
    int n = 2, cutoff = 5;
    FlowVector t{rat(1, 2), rat(3), rat(0), rat(1, 4)};
    Rational direct = tau_phi(soe, n, t, FlowVector{}, cutoff).value;
    Rational column = 0;
    for (const Partition& lam : enumerate_partitions(cutoff, n)) {
        SchurExpansion e = expansion_coeffs(soe, lam, n);
        auto it = e.find(Partition());
        if (it != e.end()) column += it->second * schur_t(lam, t);
    }
    CHECK(direct == column);
}

TEST_CASE("kp coefficient check") {
    CHECK(kp_coefficient_check(PolyBasis::monomial(9), 2, Partition({2, 2})));
    CHECK(kp_coefficient_check(PolyBasis::sp(9), 2, Partition({2, 2})));
    CHECK(kp_coefficient_check(PolyBasis::so_odd(9), 3, Partition({3, 2, 1})));
    CHECK_THROWS_AS(kp_coefficient_check(PolyBasis::sp(9), 1, Partition({2, 2})),
                    length_error);
}

} // TEST_SUITE
