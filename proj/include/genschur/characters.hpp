#pragma once

#include <string>
#include <vector>

#include "genschur/partition.hpp"
#include "genschur/polybasis.hpp"
#include "genschur/rational.hpp"
#include "genschur/schurgen.hpp"

namespace genschur {

enum class Group { Sp, SOEven, SOOdd };

Group group_from_tag(const std::string& tag); // "sp" | "so_even" | "so_odd"
std::string group_tag(Group g);

/// Torus coordinates: n nonzero rationals. Distinctness of the x's, of the
/// z_i = x_i + 1/x_i, or of the doubled list (x, 1/x) is NOT required here;
/// operations that need it check it themselves.
struct TorusPoint {
    std::vector<Rational> x;
    explicit TorusPoint(std::vector<Rational> values);
    int n() const { return static_cast<int>(x.size()); }
    std::vector<Rational> z() const; // z_i = x_i + 1/x_i
};

/// Basis of the character system for G, truncated at N.
PolyBasis group_basis(Group g, int N);

/// Irreducible character chi^G_lambda(x) = S^{phi^G}_lambda(z). Uses the
/// bialternant when the z values are distinct and the exact Schur-series
/// route sum_mu phi^G_{lambda mu} S_mu([z]) otherwise, so degenerate points
/// such as x = (1,1) evaluate without limits.
Rational character(Group g, const Partition& lambda, const TorusPoint& p);

/// Littlewood expansion right-hand side:
/// sum_alpha (-1)^{|alpha|} sum_mu C^lambda_{D,mu} S_mu(x, 1/x [, 1]) with
/// D = D'(alpha) for Sp and D(alpha) for both SO families, alpha strict,
/// 2|alpha| <= |lambda|. The doubled evaluation list must be pairwise
/// distinct (x_i = +-1 or x_i = 1/x_j are rejected with singular_error).
Rational littlewood_rhs(Group g, const Partition& lambda, const TorusPoint& p, int cutoff);

/// Coefficients phi^G_{lambda mu} of the z-variable Schur expansion.
SchurExpansion schur_expansion_z(Group g, const Partition& lambda, int n);

} // namespace genschur
