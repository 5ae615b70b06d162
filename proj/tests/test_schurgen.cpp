#include <doctest.h>

#include "genschur/errors.hpp"
#include "genschur/schurgen.hpp"
#include "genschur/symfun.hpp"
#include "genschur/verify.hpp"

using namespace genschur;

TEST_SUITE("schurgen") {

TEST_CASE("bialternant worked examples") {
    std::vector<Rational> x{rat(1, 2), rat(1, 3)};
    CHECK(bialternant(PolyBasis::monomial(6), Partition({1}), x) == x[0] + x[1]);
    CHECK(bialternant(PolyBasis::sp(6), Partition(), x) == 1);

    // Hand determinant oracle: (phi_2(z1) - phi_2(z2)) / (z1 - z2) with
    // phi_2 = z^2 - 1 gives z1 + z2.
    std::vector<Rational> z{rat(2, 5), rat(7, 3)};
    PolyBasis sp = PolyBasis::sp(6);
    Rational by_hand = (sp.evaluate(2, z[0]) - sp.evaluate(2, z[1])) / (z[0] - z[1]);
    CHECK(by_hand == z[0] + z[1]);
    CHECK(bialternant(sp, Partition({1}), z) == z[0] + z[1]);

    CHECK_THROWS_AS(bialternant(sp, Partition({1}), std::vector<Rational>{rat(1), rat(1)}),
                    singular_error);
    CHECK_THROWS_AS(bialternant(PolyBasis::sp(3), Partition({2}), z), truncation_error);
    CHECK_THROWS_AS(bialternant(sp, Partition({1, 1, 1}), z), length_error);
}

TEST_CASE("expansion coefficients") {
    SchurExpansion mono = expansion_coeffs(PolyBasis::monomial(8), Partition({3, 1}), 2);
    REQUIRE(mono.size() == 1);
    CHECK(mono.at(Partition({3, 1})) == 1);

    SchurExpansion sp1 = expansion_coeffs(PolyBasis::sp(4), Partition({2}), 1);
    REQUIRE(sp1.size() == 2);
    CHECK(sp1.at(Partition({2})) == 1);
    CHECK(sp1.at(Partition()) == rat(-1));

    // Support bound: no coefficient beyond |mu| <= |lambda| appears, and mu
    // is contained in lambda pointwise.
    SchurExpansion e = expansion_coeffs(PolyBasis::so_odd(9), Partition({3, 2}), 3);
    for (const auto& [mu, c] : e) {
        CHECK(mu.weight() <= 5);
        CHECK(Partition({3, 2}).contains(mu));
        CHECK(c != 0);
    }
}

TEST_CASE("Cauchy-Binet expansion consistency") {
    std::vector<Rational> x = seeded_point(3, 0, 2);
    for (const std::string& name : builtin_basis_names()) {
        PolyBasis b = builtin_basis(name, 9);
        for (const Partition& lam : enumerate_partitions(4, 3))
            CHECK(check_cauchy_binet(b, lam, x));
    }
}

TEST_CASE("H grid reproduces the classical grid for monomials") {
    int n = 2;
    std::vector<Rational> x{rat(2, 7), rat(3, 7)};
    HMatrix H = build_H(PolyBasis::monomial(12), x, 6, n - 1, -2);
    FlowVector t = monomial_sums(x, 10);
    auto h = complete_h_upto(t, 10);
    for (int sup = -2; sup <= n - 1; ++sup)
        for (int m = 1 - n; m <= 6; ++m) {
            int idx = sup + m;
            Rational expect = (idx < 0) ? Rational(0) : h[idx];
            CHECK(H.h(sup, m) == expect); // h^{(j)}_i = h_{i+j}
        }
    // h^{(0)}_2 at two points is the classical complete function of degree 2.
    CHECK(H.h(0, 2) == x[0] * x[0] + x[0] * x[1] + x[1] * x[1]);
}

TEST_CASE("H grid boundary values") {
    std::vector<Rational> x = seeded_point(3, 0, 1);
    for (const std::string& name : builtin_basis_names()) {
        HMatrix H = build_H(builtin_basis(name, 12), x, 4, 2, -2);
        for (int sup = -2; sup <= 2; ++sup) {
            if (-sup >= 1 - 3) CHECK(H.h(sup, -sup) == 1); // h^{(j)}_{-j} = 1
            for (int k = std::max(sup + 1, -4); k <= 2; ++k)
                CHECK(H.h(sup, -k) == 0); // h^{(j)}_{-k} = 0 for k > j
        }
    }
}

TEST_CASE("jacobi_trudi worked examples") {
    CHECK(jacobi_trudi(PolyBasis::sp(8), Partition(), {rat(1, 2), rat(1, 3)}) == 1);

    // Classical S_(2,1) = det [[h2, h3], [h0, h1]].
    std::vector<Rational> x{rat(2, 7), rat(5, 7)};
    FlowVector t = monomial_sums(x, 6);
    auto h = complete_h_upto(t, 6);
    Rational classical = h[2] * h[1] - h[3] * h[0];
    CHECK(jacobi_trudi(PolyBasis::monomial(9), Partition({2, 1}), x) == classical);

    std::vector<Rational> pts{rat(1, 2), rat(1, 3)};
    PolyBasis sp = PolyBasis::sp(9);
    CHECK(jacobi_trudi(sp, Partition({1, 1}), pts) == bialternant(sp, Partition({1, 1}), pts));
}

TEST_CASE("E grid classical content and row recursions") {
    int n = 3;
    std::vector<Rational> x = seeded_point(n, 0, 0);
    std::vector<Rational> e(n + 1);
    e[0] = 1;
    for (int a = 0; a < n; ++a)
        for (int k = std::min(a + 1, n); k >= 1; --k) e[k] += e[k - 1] * x[a];

    EMatrix E0 = build_E(PolyBasis::monomial(10), x, -3, 8);
    for (int i = -3; i <= n; ++i)
        for (int j = 1; j <= 8; ++j) {
            int idx = n - i - j + 1;
            Rational expect = (idx < 0 || idx > n) ? Rational(0) : e[idx];
            if (idx % 2 != 0) expect = -expect;
            CHECK(E0.entry(i, j) == expect);
        }
    // Bottom row is the unit row vector for every basis.
    for (const std::string& name : builtin_basis_names()) {
        EMatrix E = build_E(builtin_basis(name, 10), x, -3, 8);
        for (int j = 1; j <= 8; ++j) CHECK(E.entry(n, j) == Rational(j == 1 ? 1 : 0));
    }

    // Row recursions E_(i) = E_(i+1) J + (-1)^{n-i} e_{n-i} E_(n) and
    // E_(i+1) = E_(i) Jtilde, checked on the safe window.
    for (const std::string& name : builtin_basis_names()) {
        PolyBasis b = builtin_basis(name, 10);
        EMatrix E = build_E(b, x, -3, 9);
        RecursionData rd = b.recursion();
        for (int i = -3; i < n; ++i) {
            for (int j = 1; j <= 7; ++j) {
                Rational down = 0;
                for (int k = 1; k <= j + 1; ++k) down += E.entry(i + 1, k) * rd.J(k - 1, j - 1);
                int idx = n - i;
                if (idx >= 0 && idx <= n) {
                    Rational unit = (j == 1) ? e[idx] : Rational(0);
                    down += (idx % 2 != 0) ? -unit : unit;
                }
                CHECK(E.entry(i, j) == down);

                Rational up = 0;
                for (int k = j + 1; k <= n - i + 1 && k <= 9; ++k)
                    up += E.entry(i, k) * rd.Jtilde(k - 1, j - 1);
                CHECK(E.entry(i + 1, j) == up);
            }
        }
    }
}

TEST_CASE("generalized elementary functions match dual route") {
    // e^m_(0) = S^phi_{(1^m)} (dual Jacobi-Trudi with a single column).
    std::vector<Rational> x = seeded_point(3, 0, 3);
    for (const std::string& name : builtin_basis_names()) {
        PolyBasis b = builtin_basis(name, 10);
        EMatrix E = build_E(b, x, -2, 9);
        for (int m = 1; m <= 3; ++m) {
            Partition col(std::vector<int>(m, 1));
            CHECK(E.gen_elementary(m, 0) == bialternant(b, col, x));
        }
    }
}

TEST_CASE("dual jacobi_trudi worked examples") {
    std::vector<Rational> x = seeded_point(3, 0, 0);
    std::vector<Rational> e(4);
    e[0] = 1;
    for (int a = 0; a < 3; ++a)
        for (int k = std::min(a + 1, 3); k >= 1; --k) e[k] += e[k - 1] * x[a];
    PolyBasis mono = PolyBasis::monomial(9);
    for (int k = 1; k <= 3; ++k)
        CHECK(dual_jacobi_trudi(mono, Partition(std::vector<int>(k, 1)), x) == e[k]);
    CHECK(dual_jacobi_trudi(PolyBasis::so_even(9), Partition(), x) == 1);

    std::vector<Rational> pts{rat(1, 2), rat(1, 3)};
    PolyBasis sp = PolyBasis::sp(9);
    CHECK(dual_jacobi_trudi(sp, Partition({2, 1}), pts) ==
          jacobi_trudi(sp, Partition({2, 1}), pts));
}

TEST_CASE("giambelli worked examples") {
    std::vector<Rational> x{rat(2, 7), rat(3, 7)};
    PolyBasis mono = PolyBasis::monomial(9);
    // A hook is its own 1x1 Giambelli determinant.
    CHECK(giambelli(mono, Partition({3, 1}), x) == bialternant(mono, Partition({3, 1}), x));
    CHECK(giambelli(mono, Partition({2, 2}), x) == bialternant(mono, Partition({2, 2}), x));
    CHECK(giambelli(PolyBasis::sp(9), Partition(), x) == 1);
}

TEST_CASE("four routes agree, including n = 4") {
    for (const std::string& name : builtin_basis_names()) {
        PolyBasis b = builtin_basis(name, 17);
        for (int p = 0; p < 2; ++p) {
            std::vector<Rational> x = seeded_point(4, 0, p);
            for (const Partition& lam : enumerate_partitions(6, 4))
                CHECK(four_routes(b, lam, x).agree);
        }
    }
}

TEST_CASE("E H and H E are mutually inverse on safe windows") {
    for (const std::string& name : builtin_basis_names())
        for (int n : {2, 3}) {
            PolyBasis b = builtin_basis(name, 2 * n + 7);
            std::vector<Rational> x = seeded_point(n, 0, 0);
            CHECK(check_eh_identity(b, x, 1 - 4));
            CHECK(check_he_identity(b, x, n + 4));
        }
}

TEST_CASE("grassmannian element equality and dressing") {
    for (const std::string& name : builtin_basis_names())
        for (int n : {1, 2, 3}) {
            PolyBasis b = builtin_basis(name, 12);
            std::vector<Rational> x = seeded_point(n, 0, 4);
            CHECK(check_grassmannian(b, x, 8));
            CHECK(check_h_dressing(b, x, 8));
        }
}

TEST_CASE("pluecker check on coordinate families") {
    // Kronecker-delta family of the monomial basis.
    CoordFamily delta;
    delta.max_weight = 4;
    delta.max_length = 2;
    delta.coords.emplace(Partition({2, 2}), rat(1));
    CHECK(pluecker_check(delta, Partition({2, 2})));
    CHECK(pluecker_check(delta, Partition()));

    // Perturbing one coordinate breaks the relation.
    CoordFamily broken = delta;
    broken.coords[Partition()] = rat(1); // pi_0 was an exact zero
    CHECK_FALSE(pluecker_check(broken, Partition({2, 2})));

    // Coefficient family of the symplectic basis at a rank-2 partition.
    CoordFamily sp_fam;
    sp_fam.max_weight = 4;
    sp_fam.max_length = 2;
    sp_fam.coords = expansion_coeffs(PolyBasis::sp(8), Partition({2, 2}), 2);
    CHECK(pluecker_check(sp_fam, Partition({2, 2})));

    CoordFamily perturbed = sp_fam;
    perturbed.coords[Partition({2})] += 1;
    CHECK_FALSE(pluecker_check(perturbed, Partition({2, 2})));

    // Hooks outside the declared support are an incomplete family.
    CoordFamily shallow = sp_fam;
    shallow.max_weight = 2;
    CHECK_THROWS_AS(pluecker_check(shallow, Partition({2, 2})), incomplete_family_error);
}

} // TEST_SUITE
