#include "genschur/verify.hpp"

#include <algorithm>
#include <random>

#include "genschur/characters.hpp"
#include "genschur/errors.hpp"
#include "genschur/matrix.hpp"
#include "genschur/moments.hpp"
#include "genschur/schurgen.hpp"
#include "genschur/symfun.hpp"
#include "genschur/tauseries.hpp"
#include "genschur/walks.hpp"

namespace genschur {

namespace {

constexpr int kPrimes[32] = {2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,
                             37,  41,  43,  47,  53,  59,  61,  67,  71,  73,  79,
                             83,  89,  97,  101, 103, 107, 109, 113, 127, 131};

void fail(CheckReport& r, const std::string& what) {
    if (r.pass) {
        r.pass = false;
        r.detail = what;
    }
}

} // namespace

std::vector<Rational> seeded_point(int n, std::uint64_t seed, int index) {
    std::vector<int> table(kPrimes, kPrimes + 32);
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(table.begin(), table.end(), rng);
    }
    std::vector<Rational> x(n);
    for (int k = 0; k < n; ++k) x[k] = rat(table[(index * n + k) % 32], 7);
    return x;
}

PolyBasis builtin_basis(const std::string& name, int N) {
    if (name == "monomial") return PolyBasis::monomial(N);
    if (name == "sp") return PolyBasis::sp(N);
    if (name == "so_even") return PolyBasis::so_even(N);
    if (name == "so_odd") return PolyBasis::so_odd(N);
    throw shape_error("unknown basis name '" + name + "'");
}

const std::vector<std::string>& builtin_basis_names() {
    static const std::vector<std::string> names{"monomial", "sp", "so_even", "so_odd"};
    return names;
}

CheckReport sweep_four_route(const SweepConfig& cfg) {
    CheckReport r;
    r.name = "four_route";
    for (const std::string& name : builtin_basis_names())
        for (int n : cfg.ns) {
            PolyBasis basis = builtin_basis(name, cfg.max_weight + 2 * n + 2);
            for (const Partition& lam : enumerate_partitions(cfg.max_weight, n))
                for (int p = 0; p < cfg.points; ++p) {
                    std::vector<Rational> x = seeded_point(n, cfg.seed, p);
                    FourRoutes fr = four_routes(basis, lam, x);
                    ++r.cases;
                    if (!fr.agree)
                        fail(r, name + " n=" + std::to_string(n) + " lambda=" + lam.str() +
                                    " point " + std::to_string(p));
                }
        }
    return r;
}

CheckReport sweep_grassmannian(const SweepConfig& cfg, int depth) {
    CheckReport r;
    r.name = "grassmannian";
    for (const std::string& name : builtin_basis_names())
        for (int n : cfg.ns) {
            int d = std::max(depth, n);
            PolyBasis basis = builtin_basis(name, d + n + 2);
            for (int p = 0; p < std::min(cfg.points, 2); ++p) {
                std::vector<Rational> x = seeded_point(n, cfg.seed, p);
                ++r.cases;
                if (!check_grassmannian(basis, x, d))
                    fail(r, "H H(0)^-1 != Phi Phi(0)^-1 for " + name + " n=" + std::to_string(n));
                ++r.cases;
                if (!check_h_dressing(basis, x, d))
                    fail(r, "H != A H0 for " + name + " n=" + std::to_string(n));
            }
        }
    return r;
}

CheckReport sweep_duality(const SweepConfig& cfg) {
    CheckReport r;
    r.name = "duality";
    for (const std::string& name : builtin_basis_names())
        for (int n : cfg.ns) {
            int extra = 4;
            PolyBasis basis = builtin_basis(name, n + extra + n + 2);
            for (int p = 0; p < std::min(cfg.points, 2); ++p) {
                std::vector<Rational> x = seeded_point(n, cfg.seed, p);
                ++r.cases;
                if (!check_eh_identity(basis, x, 1 - extra))
                    fail(r, "E H != I for " + name + " n=" + std::to_string(n));
                ++r.cases;
                if (!check_he_identity(basis, x, n + extra))
                    fail(r, "H E != I for " + name + " n=" + std::to_string(n));
            }
        }
    // Classical orthogonality sum_k (-1)^{i-k} e_{i-k} h_{k-j} = delta_ij on
    // the monomial system.
    int n = 3;
    std::vector<Rational> x = seeded_point(n, cfg.seed, 0);
    std::vector<Rational> e(n + 1);
    e[0] = 1;
    for (int a = 0; a < n; ++a)
        for (int k = std::min(a + 1, n); k >= 1; --k) e[k] += e[k - 1] * x[a];
    FlowVector t = monomial_sums(x, 8);
    std::vector<Rational> h = complete_h_upto(t, 8);
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; j <= 6; ++j) {
            Rational s = 0;
            for (int k = j; k <= i; ++k) {
                if (i - k > n) continue;
                Rational term = e[i - k] * h[k - j];
                s += ((i - k) % 2 != 0) ? -term : term;
            }
            ++r.cases;
            if (s != Rational(i == j ? 1 : 0)) fail(r, "classical e/h orthogonality");
        }
    return r;
}

CheckReport sweep_cauchy_binet(const SweepConfig& cfg) {
    CheckReport r;
    r.name = "cauchy_binet";
    for (const std::string& name : builtin_basis_names())
        for (int n : cfg.ns) {
            PolyBasis basis = builtin_basis(name, cfg.max_weight + n + 1);
            for (const Partition& lam : enumerate_partitions(cfg.max_weight, n))
                for (int p = 0; p < cfg.points; ++p) {
                    std::vector<Rational> x = seeded_point(n, cfg.seed, p);
                    ++r.cases;
                    if (!check_cauchy_binet(basis, lam, x))
                        fail(r, name + " n=" + std::to_string(n) + " lambda=" + lam.str());
                }
        }
    return r;
}

CheckReport sweep_characters() {
    CheckReport r;
    r.name = "characters";
    const int n = 2;
    std::vector<TorusPoint> points{TorusPoint({rat(2), rat(3)}),
                                   TorusPoint({rat(1, 2), rat(1, 3)}),
                                   TorusPoint({rat(5), rat(7, 2)})};
    for (Group g : {Group::Sp, Group::SOEven, Group::SOOdd})
        for (const Partition& lam : enumerate_partitions(4, n))
            for (const TorusPoint& p : points) {
                ++r.cases;
                Rational lhs = character(g, lam, p);
                Rational rhs = littlewood_rhs(g, lam, p, std::max(lam.weight(), 1));
                if (lhs != rhs)
                    fail(r, group_tag(g) + " lambda=" + lam.str() + ": character " +
                                rat_str(lhs) + " != littlewood " + rat_str(rhs));
            }
    ++r.cases;
    Rational dim = character(Group::Sp, Partition({1}), TorusPoint({rat(1), rat(1)}));
    if (dim != 4) fail(r, "Sp(4) defining character at x=(1,1) is " + rat_str(dim) + ", not 4");
    return r;
}

CheckReport sweep_pluecker(const SweepConfig& cfg) {
    CheckReport r;
    r.name = "pluecker";
    for (const std::string& name : builtin_basis_names())
        for (int n : cfg.ns) {
            PolyBasis basis = builtin_basis(name, cfg.max_weight + n + 1);
            for (const Partition& lam : enumerate_partitions(cfg.max_weight, n)) {
                if (lam.frobenius_rank() > 2) continue;
                ++r.cases;
                if (!kp_coefficient_check(basis, n, lam))
                    fail(r, name + " n=" + std::to_string(n) + " lambda=" + lam.str());
            }
        }
    return r;
}

CheckReport sweep_moments() {
    CheckReport r;
    r.name = "moments";
    std::vector<DiscreteMeasure> measures;
    measures.emplace_back(std::vector<Rational>{rat(0), rat(1)},
                          std::vector<Rational>{rat(1), rat(1)});
    measures.emplace_back(std::vector<Rational>{rat(-1), rat(1)},
                          std::vector<Rational>{rat(1), rat(1)});
    measures.emplace_back(std::vector<Rational>{rat(1), rat(2), rat(3)},
                          std::vector<Rational>{rat(1, 2), rat(1, 3), rat(1, 6)});
    measures.emplace_back(std::vector<Rational>{rat(-2), rat(1, 2), rat(3), rat(5)},
                          std::vector<Rational>{rat(1), rat(2), rat(1, 4), rat(1)});
    for (const DiscreteMeasure& mu : measures)
        for (int n = 1; n <= 3; ++n) {
            ++r.cases;
            Rational lhs = eigenvalue_sum(mu, n, FlowVector{}, 0);
            Rational rhs = B_coefficient(mu, Partition::zero(), n);
            if (lhs != rhs) fail(r, "Andreief identity n=" + std::to_string(n));
        }
    ++r.cases;
    if (eigenvalue_sum(measures[0], 2, FlowVector{}, 0) != 1)
        fail(r, "two-node worked value is not 1");

    // Bimoment Cauchy-Binet on a constructed factorization M = theta^t phi.
    int N = 7;
    PolyBasis theta = PolyBasis::so_odd(N), phi = PolyBasis::sp(N);
    Matrix m = theta.coeffs().transpose() * phi.coeffs();
    for (int n = 1; n <= 2; ++n)
        for (const Partition& lam : enumerate_partitions(3, n))
            for (const Partition& nu : enumerate_partitions(3, n)) {
                Rational lhs = moment_minor(m, lam, nu, n);
                Rational rhs = 0;
                // Cauchy-Binet over all n-row subsets, enumerated as
                // partitions rho with rho_1 <= N - n.
                for (const Partition& rho : enumerate_partitions((N - n) * n, n)) {
                    if (rho.first() > N - n) continue;
                    SchurExpansion et = expansion_coeffs(theta, rho, n);
                    SchurExpansion ep = expansion_coeffs(phi, rho, n);
                    auto it = et.find(lam);
                    auto ip = ep.find(nu);
                    if (it != et.end() && ip != ep.end()) rhs += it->second * ip->second;
                }
                ++r.cases;
                if (lhs != rhs)
                    fail(r, "bimoment Cauchy-Binet lambda=" + lam.str() + " nu=" + nu.str());
            }
    return r;
}

CheckReport sweep_walks() {
    CheckReport r;
    r.name = "walks";
    RateSpec ones(std::vector<Rational>(7, rat(1)));
    RateSpec mixed({rat(1), rat(2), rat(1, 2), rat(3), rat(1), rat(5, 3), rat(2)});
    for (const RateSpec* rs : {&ones, &mixed})
        for (int n = 1; n <= 2; ++n)
            for (const Partition& lam : enumerate_partitions(3, n))
                for (const Partition& mu : enumerate_partitions(3, n)) {
                    ++r.cases;
                    if (!semigroup_check(*rs, lam, mu, n, rat(2, 3)))
                        fail(r, "semigroup lambda=" + lam.str() + " mu=" + mu.str() +
                                    " n=" + std::to_string(n));
                }
    // Single-particle closed form t^d/d! at unit rates.
    for (int d = 0; d <= 5; ++d) {
        ++r.cases;
        Rational w = transition_weight(ones, d ? Partition({d}) : Partition::zero(),
                                       Partition::zero(), 1, rat(3, 2));
        Rational expect = rat(3, 2);
        Rational p = 1;
        for (int i = 0; i < d; ++i) p *= expect;
        if (w != p / Rational(factorial(d))) fail(r, "single-particle t^d/d! at d=" + std::to_string(d));
    }
    // Chapman-Kolmogorov over exhaustive small states.
    Rational s = rat(1, 2), t = rat(1, 3);
    for (int n = 1; n <= 2; ++n)
        for (const Partition& lam : enumerate_partitions(3, n))
            for (const Partition& mu : enumerate_partitions(3, n)) {
                if (!lam.contains(mu)) continue;
                Rational direct = transition_weight(mixed, lam, mu, n, s + t);
                Rational sum = 0;
                for (const Partition& nu : enumerate_partitions(lam.weight(), n)) {
                    if (!nu.contains(mu) || !lam.contains(nu)) continue;
                    sum += transition_weight(mixed, nu, mu, n, s) *
                           transition_weight(mixed, lam, nu, n, t);
                }
                ++r.cases;
                if (direct != sum)
                    fail(r, "Chapman-Kolmogorov lambda=" + lam.str() + " mu=" + mu.str());
            }
    return r;
}

CheckReport sweep_window_recursion(const std::string& basis_name, int N, int n, int kmax,
                                   std::uint64_t seed) {
    CheckReport r;
    r.name = "window_recursion";
    PolyBasis basis = builtin_basis(basis_name, N);
    std::vector<Rational> x = seeded_point(n, seed, 0);
    for (int k = 0; k <= kmax; ++k) {
        ++r.cases;
        Matrix residual = window_recursion_residual(basis, x, k);
        Matrix boundary = window_recursion_boundary(basis, x, k);
        if (!(residual == boundary))
            fail(r, "residual != boundary term at k=" + std::to_string(k));
        if (k == 0 && !(residual == Matrix(n, n)))
            fail(r, "projected recursion not exact at k=0");
    }
    return r;
}

} // namespace genschur
