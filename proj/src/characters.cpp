#include "genschur/characters.hpp"

#include "genschur/errors.hpp"
#include "genschur/symfun.hpp"

namespace genschur {

Group group_from_tag(const std::string& tag) {
    if (tag == "sp") return Group::Sp;
    if (tag == "so_even") return Group::SOEven;
    if (tag == "so_odd") return Group::SOOdd;
    throw shape_error("unknown group tag '" + tag + "' (expected sp, so_even, so_odd)");
}

std::string group_tag(Group g) {
    switch (g) {
        case Group::Sp: return "sp";
        case Group::SOEven: return "so_even";
        default: return "so_odd";
    }
}

TorusPoint::TorusPoint(std::vector<Rational> values) : x(std::move(values)) {
    if (x.empty()) throw shape_error("torus point needs at least one coordinate");
    for (const Rational& v : x)
        if (v == 0) throw shape_error("torus coordinates must be nonzero");
}

std::vector<Rational> TorusPoint::z() const {
    std::vector<Rational> zs;
    zs.reserve(x.size());
    for (const Rational& v : x) zs.push_back(v + 1 / v);
    return zs;
}

PolyBasis group_basis(Group g, int N) {
    switch (g) {
        case Group::Sp: return PolyBasis::sp(N);
        case Group::SOEven: return PolyBasis::so_even(N);
        default: return PolyBasis::so_odd(N);
    }
}

namespace {

bool pairwise_distinct(const std::vector<Rational>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] == v[j]) return false;
    return true;
}

} // namespace

Rational character(Group g, const Partition& lambda, const TorusPoint& p) {
    int n = p.n();
    if (lambda.length() > n)
        throw length_error("character: partition length exceeds torus rank");
    std::vector<Rational> zs = p.z();
    PolyBasis basis = group_basis(g, lambda.first() + n);
    if (pairwise_distinct(zs)) return bialternant(basis, lambda, zs);
    // Degenerate z values: evaluate through the Schur expansion, which only
    // needs the monomial sums of z.
    Rational sum = 0;
    if (lambda.weight() == 0) return Rational(1);
    FlowVector t = monomial_sums(zs, lambda.weight());
    for (const auto& [mu, c] : expansion_coeffs(basis, lambda, n)) sum += c * schur_t(mu, t);
    return sum;
}

Rational littlewood_rhs(Group g, const Partition& lambda, const TorusPoint& p, int cutoff) {
    if (cutoff < lambda.weight())
        throw truncation_error("littlewood_rhs: cutoff must cover |lambda| = " +
                               std::to_string(lambda.weight()));
    int n = p.n();
    if (lambda.length() > n)
        throw length_error("littlewood_rhs: partition length exceeds torus rank");

    std::vector<Rational> doubled;
    for (const Rational& v : p.x) doubled.push_back(v);
    for (const Rational& v : p.x) doubled.push_back(1 / v);
    if (g == Group::SOOdd) doubled.push_back(Rational(1));
    if (!pairwise_distinct(doubled))
        throw singular_error("littlewood_rhs: doubled evaluation list has repeated values");

    Rational total = 0;
    for (const std::vector<int>& alpha : enumerate_strict_partitions(lambda.weight() / 2)) {
        Partition d;
        if (alpha.empty()) {
            d = Partition::zero();
        } else {
            auto [deven, dodd] = doubles(alpha);
            d = (g == Group::Sp) ? dodd : deven; // D'(alpha) for Sp, D(alpha) for SO
        }
        if (!lambda.contains(d)) continue;
        int sign = static_cast<int>(alpha.size()) == 0
                       ? 1
                       : ([&] { int w = 0; for (int a : alpha) w += a; return w % 2 ? -1 : 1; }());
        int rest = lambda.weight() - d.weight();
        for (const Partition& mu : enumerate_partitions(rest, n)) {
            if (mu.weight() != rest || !lambda.contains(mu)) continue;
            long c = littlewood_richardson(d, mu, lambda);
            if (c == 0) continue;
            total += Rational(sign * c) * classical_schur(mu, doubled);
        }
    }
    return total;
}

SchurExpansion schur_expansion_z(Group g, const Partition& lambda, int n) {
    return expansion_coeffs(group_basis(g, lambda.first() + n), lambda, n);
}

} // namespace genschur
