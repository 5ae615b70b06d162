#include "genschur/symfun.hpp"

#include <algorithm>
#include <functional>

#include "genschur/errors.hpp"
#include "genschur/matrix.hpp"

namespace genschur {

FlowVector monomial_sums(const std::vector<Rational>& x, int K) {
    if (K < 1) throw shape_error("monomial_sums: K must be >= 1");
    FlowVector t(K);
    std::vector<Rational> pow(x.size(), Rational(1));
    for (int i = 1; i <= K; ++i) {
        Rational s = 0;
        for (std::size_t a = 0; a < x.size(); ++a) {
            pow[a] *= x[a];
            s += pow[a];
        }
        t[i - 1] = s / Rational(i);
    }
    return t;
}

std::vector<Rational> complete_h_upto(const FlowVector& t, int kmax) {
    std::vector<Rational> h(kmax + 1);
    h[0] = 1;
    for (int k = 1; k <= kmax; ++k) {
        Rational s = 0;
        for (int i = 1; i <= k; ++i) {
            Rational ti = (i <= static_cast<int>(t.size())) ? t[i - 1] : Rational(0);
            if (ti != 0) s += Rational(i) * ti * h[k - i];
        }
        h[k] = s / Rational(k);
    }
    return h;
}

Rational complete_h(const FlowVector& t, int k) {
    if (k < 0) return Rational(0);
    return complete_h_upto(t, k)[k];
}

Rational schur_t(const Partition& lambda, const FlowVector& t) {
    int l = lambda.length();
    if (l == 0) return Rational(1);
    auto h = complete_h_upto(t, lambda.first() + l);
    Matrix m(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            int idx = lambda.part(i) - i + j; // 0-based row i, column j
            m(i, j) = (idx < 0) ? Rational(0) : h[idx];
        }
    return det(m);
}

MonomialPoly schur_monomials(const Partition& lambda, int nvars) {
    MonomialPoly out;
    int rows = lambda.length();
    if (rows == 0) {
        out[Exponents(nvars, 0)] = 1;
        return out;
    }
    if (rows > nvars) return out; // vanishes

    // Enumerate semistandard tableaux cell by cell, row-major: entries in
    // 1..nvars, rows weakly increasing, columns strictly increasing.
    std::vector<std::vector<int>> tab(rows);
    for (int r = 0; r < rows; ++r) tab[r].assign(lambda.part(r), 0);
    Exponents content(nvars, 0);

    std::function<void(int, int)> fill = [&](int r, int c) {
        if (r == rows) {
            auto [it, fresh] = out.try_emplace(content, 1);
            if (!fresh) it->second += 1;
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == lambda.part(r)) { nr = r + 1; nc = 0; }
        int lo = 1;
        if (c > 0) lo = std::max(lo, tab[r][c - 1]);
        if (r > 0 && c < lambda.part(r - 1)) lo = std::max(lo, tab[r - 1][c] + 1);
        for (int v = lo; v <= nvars; ++v) {
            tab[r][c] = v;
            ++content[v - 1];
            fill(nr, nc);
            --content[v - 1];
        }
    };
    fill(0, 0);
    return out;
}

MonomialPoly mul(const MonomialPoly& a, const MonomialPoly& b) {
    MonomialPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            Rational v = ca * cb;
            auto [it, fresh] = out.try_emplace(std::move(e), v);
            if (!fresh) {
                it->second += v;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}

std::map<Partition, Rational, PartitionOrder> to_schur_basis(MonomialPoly p, int nvars) {
    std::map<Partition, Rational, PartitionOrder> result;
    for (auto it = p.begin(); it != p.end();)
        it = (it->second == 0) ? p.erase(it) : std::next(it);

    while (!p.empty()) {
        // The lex-greatest surviving exponent vector of a symmetric
        // polynomial is weakly decreasing, and it is the leading monomial of
        // exactly one Schur function.
        auto lead = std::prev(p.end());
        Exponents e = lead->first;
        Rational c = lead->second;
        std::vector<int> parts;
        for (int v : e) {
            if (!parts.empty() && v > parts.back())
                throw std::logic_error("to_schur_basis: polynomial is not symmetric");
            if (v > 0) parts.push_back(v);
            else if (v < 0) throw std::logic_error("to_schur_basis: negative exponent");
        }
        Partition lam(parts);
        result[lam] += c;
        for (const auto& [em, cm] : schur_monomials(lam, nvars)) {
            auto it = p.find(em);
            if (it == p.end()) {
                if (cm * c != 0) p[em] = -c * cm;
            } else {
                it->second -= c * cm;
                if (it->second == 0) p.erase(it);
            }
        }
    }
    for (auto it = result.begin(); it != result.end();)
        it = (it->second == 0) ? result.erase(it) : std::next(it);
    return result;
}

long littlewood_richardson(const Partition& mu, const Partition& nu,
                           const Partition& lambda, int max_weight) {
    if (lambda.weight() > max_weight)
        throw domain_error("littlewood_richardson: weight above the desk-scale cap of " +
                           std::to_string(max_weight));
    if (mu.weight() + nu.weight() != lambda.weight()) return 0;
    if (!lambda.contains(mu) || !lambda.contains(nu)) return 0;
    if (lambda.is_zero()) return 1;

    int m = lambda.length();
    MonomialPoly prod = mul(schur_monomials(mu, m), schur_monomials(nu, m));
    auto schur = to_schur_basis(std::move(prod), m);
    auto it = schur.find(lambda);
    if (it == schur.end()) return 0;
    if (!is_integer(it->second) || it->second < 0)
        throw std::logic_error("littlewood_richardson: non-integral coefficient");
    return static_cast<long>(it->second.get_num().get_si());
}

} // namespace genschur
