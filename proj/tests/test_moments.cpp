#include <doctest.h>

#include "genschur/errors.hpp"
#include "genschur/moments.hpp"
#include "genschur/schurgen.hpp"
#include "genschur/tauseries.hpp"

using namespace genschur;

namespace {

DiscreteMeasure two_node() {
    return DiscreteMeasure({rat(0), rat(1)}, {rat(1), rat(1)});
}

} // namespace

TEST_SUITE("moments") {

TEST_CASE("hankel matrices") {
    Matrix h = hankel(two_node(), 3);
    CHECK(h(0, 0) == 2); // m_0
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a + b >= 1) CHECK(h(a, b) == 1); // m_k = 1 for k >= 1

    DiscreteMeasure single({rat(3, 2)}, {rat(1)});
    Matrix hs = hankel(single, 4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            Rational zk = 1;
            for (int i = 0; i < a + b; ++i) zk *= rat(3, 2);
            CHECK(hs(a, b) == zk);
        }
    CHECK(det(hankel(single, 2)) == 0); // rank one

    DiscreteMeasure empty({}, {});
    CHECK(hankel(empty, 2) == Matrix(2, 2));

    CHECK_THROWS_AS(DiscreteMeasure({rat(1), rat(1)}, {rat(1), rat(1)}), shape_error);
    CHECK_THROWS_AS(DiscreteMeasure({rat(1)}, {rat(1), rat(2)}), shape_error);
}

TEST_CASE("B coefficients") {
    CHECK(B_coefficient(two_node(), Partition(), 2) == 1); // m0 m2 - m1^2
    DiscreteMeasure mu({rat(1), rat(2), rat(-1)}, {rat(1, 2), rat(1), rat(2)});
    for (int k = 0; k <= 4; ++k)
        CHECK(B_coefficient(mu, k ? Partition({k}) : Partition(), 1) == mu.moment(k));

    // B_{lambda,n} at lambda = (0) is the leading Hankel determinant.
    for (int n = 1; n <= 3; ++n)
        CHECK(B_coefficient(mu, Partition(), n) == det(hankel(mu, n)));
}

TEST_CASE("B coefficient matches the Gram-factorized Cauchy-Binet sum") {
    int N = 7, n = 2;
    PolyBasis phi = PolyBasis::sp(N);
    Matrix gram = gram_matrix(phi);
    for (const Partition& lam : enumerate_partitions(3, n)) {
        Rational lhs = moment_minor(gram, lam, Partition(), n);
        Rational rhs = 0;
        for (const Partition& rho : enumerate_partitions((N - n) * n, n)) {
            if (rho.first() > N - n) continue;
            SchurExpansion e = expansion_coeffs(phi, rho, n);
            auto il = e.find(lam);
            auto i0 = e.find(Partition());
            if (il != e.end() && i0 != e.end()) rhs += il->second * i0->second;
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("eigenvalue sums at t = 0") {
    CHECK(eigenvalue_sum(two_node(), 2, {}, 0) == 1);
    DiscreteMeasure mu({rat(2), rat(-1), rat(1, 2)}, {rat(1), rat(3), rat(1, 5)});
    CHECK(eigenvalue_sum(mu, 1, {}, 0) == mu.moment(0));
    CHECK(eigenvalue_sum(two_node(), 3, {}, 0) == 0); // more particles than nodes
    for (int n = 1; n <= 3; ++n)
        CHECK(eigenvalue_sum(mu, n, {}, 0) == B_coefficient(mu, Partition(), n));
}

TEST_CASE("eigenvalue sum with flows expands over B coefficients") {
    // Truncated Cauchy kernel: value equals sum_{|lambda|<=cutoff} B_lambda S_lambda(t).
    DiscreteMeasure mu({rat(1), rat(-1), rat(2)}, {rat(1), rat(1, 2), rat(1, 3)});
    FlowVector t{rat(1, 2), rat(-1, 3)};
    for (int n = 1; n <= 2; ++n)
        for (int cutoff : {0, 1, 3}) {
            Rational direct = eigenvalue_sum(mu, n, t, cutoff);
            Rational series = 0;
            for (const Partition& lam : enumerate_partitions(cutoff, n))
                series += B_coefficient(mu, lam, n) * schur_t(lam, t);
            CHECK(direct == series);
        }
}

TEST_CASE("bimoments and B2 coefficients") {
    BiMeasure prod;
    prod.points.push_back({rat(2), rat(3), rat(1)});
    Matrix m = bimoment(prod, 3);
    CHECK(m(0, 0) == 1);
    CHECK(m(2, 1) == 12); // z^2 w
    CHECK(B2_coefficient(prod, Partition(), Partition(), 1) == 1);
    CHECK(B2_coefficient(prod, Partition(), Partition(), 2) == 0); // rank one

    BiMeasure two;
    two.points.push_back({rat(1), rat(2), rat(1, 2)});
    two.points.push_back({rat(-1), rat(1), rat(2)});
    CHECK(B2_coefficient(two, Partition(), Partition(), 1) == rat(5, 2)); // total mass
}

TEST_CASE("B2 equals the Cauchy-Binet double sum for theta^t phi") {
    int N = 6;
    PolyBasis theta = PolyBasis::so_even(N), phi = PolyBasis::so_odd(N);
    Matrix m = theta.coeffs().transpose() * phi.coeffs();
    for (int n = 1; n <= 2; ++n)
        for (const Partition& lam : enumerate_partitions(2, n))
            for (const Partition& nu : enumerate_partitions(2, n)) {
                Rational lhs = moment_minor(m, lam, nu, n);
                Rational rhs = 0;
                for (const Partition& rho : enumerate_partitions((N - n) * n, n)) {
                    if (rho.first() > N - n) continue;
                    SchurExpansion et = expansion_coeffs(theta, rho, n);
                    SchurExpansion ep = expansion_coeffs(phi, rho, n);
                    auto it = et.find(lam);
                    auto ip = ep.find(nu);
                    if (it != et.end() && ip != ep.end()) rhs += it->second * ip->second;
                }
                CHECK(lhs == rhs);
            }
}

TEST_CASE("monic orthogonal polynomials") {
    DiscreteMeasure pm({rat(1), rat(-1)}, {rat(1), rat(1)});
    PolyBasis p = monic_orthogonal(pm, 2);
    CHECK(p.coeff(1, 0) == 0); // p_1 = x
    CHECK(p.coeff(1, 1) == 1);

    DiscreteMeasure pm3({rat(1), rat(-1), rat(0)}, {rat(1), rat(1), rat(1)});
    PolyBasis q = monic_orthogonal(pm3, 3);
    CHECK(q.coeff(2, 0) == rat(-2, 3)); // p_2 = x^2 - 2/3
    CHECK(q.coeff(2, 1) == 0);

    // Exact pairwise orthogonality.
    auto inner = [&](int i, int j) {
        Rational s = 0;
        for (std::size_t c = 0; c < pm3.nodes.size(); ++c)
            s += pm3.weights[c] * q.evaluate(i, pm3.nodes[c]) * q.evaluate(j, pm3.nodes[c]);
        return s;
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < i; ++j) CHECK(inner(i, j) == 0);

    DiscreteMeasure single({rat(2)}, {rat(1)});
    CHECK(monic_orthogonal(single, 1).truncation() == 1);
    CHECK_THROWS_AS(monic_orthogonal(single, 2), degeneracy_error);
}

TEST_CASE("symmetric two-point measure gives the symplectic start") {
    // Nodes +-1 with unit weights: p_0 = 1 and p_1 = x come out of exact
    // Gram-Schmidt. A third polynomial would need the 3x3 Hankel minor to be
    // nonzero, which a rank-2 measure cannot provide, so k = 3 is degenerate
    // under the nondegeneracy precondition. The x^2 - 1 continuation is the
    // symplectic system and appears there instead.
    DiscreteMeasure pm({rat(1), rat(-1)}, {rat(1), rat(1)});
    PolyBasis p = monic_orthogonal(pm, 2);
    CHECK(p.coeff(0, 0) == 1);
    CHECK(p.coeff(1, 0) == 0);
    CHECK(p.coeff(1, 1) == 1);
    CHECK_THROWS_AS(monic_orthogonal(pm, 3), degeneracy_error);
    CHECK(PolyBasis::sp(3).coeff(2, 0) == rat(-1));
}

} // TEST_SUITE
