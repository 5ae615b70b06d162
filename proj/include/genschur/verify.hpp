#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "genschur/partition.hpp"
#include "genschur/polybasis.hpp"
#include "genschur/rational.hpp"

namespace genschur {

/// Deterministic evaluation points: n distinct small primes scaled by 1/7.
/// index selects consecutive prime windows; a nonzero seed shuffles the
/// prime table reproducibly.
std::vector<Rational> seeded_point(int n, std::uint64_t seed, int index);

struct CheckReport {
    std::string name;
    bool pass = true;
    long cases = 0;
    std::string detail; // first failing case, empty when pass
};

struct SweepConfig {
    int max_weight = 6;
    std::vector<int> ns = {1, 2, 3};
    int points = 5;
    std::uint64_t seed = 0;
};

PolyBasis builtin_basis(const std::string& name, int N); // monomial|sp|so_even|so_odd
const std::vector<std::string>& builtin_basis_names();

CheckReport sweep_four_route(const SweepConfig& cfg);
CheckReport sweep_grassmannian(const SweepConfig& cfg, int depth);
CheckReport sweep_duality(const SweepConfig& cfg);
CheckReport sweep_cauchy_binet(const SweepConfig& cfg);
CheckReport sweep_characters();
CheckReport sweep_pluecker(const SweepConfig& cfg);
CheckReport sweep_moments();
CheckReport sweep_walks();
CheckReport sweep_window_recursion(const std::string& basis_name, int N, int n, int kmax,
                                   std::uint64_t seed);

} // namespace genschur
