#include "genschur/walks.hpp"

#include <algorithm>

#include "genschur/errors.hpp"

namespace genschur {

int TimePoly::degree() const {
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
        if (c[k] != 0) return k;
    return -1;
}

void TimePoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Rational TimePoly::eval(const Rational& t) const {
    Rational v = 0;
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) v = v * t + c[k];
    return v;
}

TimePoly TimePoly::derivative() const {
    TimePoly d;
    for (std::size_t k = 1; k < c.size(); ++k) d.c.push_back(Rational(static_cast<long>(k)) * c[k]);
    d.trim();
    return d;
}

bool TimePoly::operator==(const TimePoly& o) const {
    TimePoly a = *this, b = o;
    a.trim();
    b.trim();
    return a.c == b.c;
}

TimePoly operator+(const TimePoly& a, const TimePoly& b) {
    TimePoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t k = 0; k < r.c.size(); ++k) {
        if (k < a.c.size()) r.c[k] += a.c[k];
        if (k < b.c.size()) r.c[k] += b.c[k];
    }
    r.trim();
    return r;
}

TimePoly operator-(const TimePoly& a, const TimePoly& b) {
    TimePoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t k = 0; k < r.c.size(); ++k) {
        if (k < a.c.size()) r.c[k] += a.c[k];
        if (k < b.c.size()) r.c[k] -= b.c[k];
    }
    r.trim();
    return r;
}

TimePoly operator*(const TimePoly& a, const TimePoly& b) {
    TimePoly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            if (b.c[j] != 0) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

RateSpec::RateSpec(std::vector<Rational> r) : rates(std::move(r)) {
    for (const Rational& v : rates)
        if (v <= 0) throw shape_error("rates must be positive");
}

Matrix generator(const RateSpec& r) {
    int N = r.truncation();
    Matrix a(N, N);
    for (int b = 0; b + 1 < N; ++b) a(b + 1, b) = r.rate(b + 1);
    return a;
}

namespace {

std::vector<int> coords_checked(const RateSpec& r, const Partition& p, int n,
                                const char* who) {
    if (p.length() > n)
        throw length_error(std::string(who) + ": partition length exceeds n");
    std::vector<int> l = p.particle_coords(n, n);
    if (l[0] >= r.truncation())
        throw truncation_error(std::string(who) + ": particle coordinate " +
                               std::to_string(l[0]) + " outside truncation N = " +
                               std::to_string(r.truncation()));
    return l;
}

// Determinant of a matrix of polynomials by column-subset dynamic
// programming (division-free).
TimePoly poly_det(const std::vector<std::vector<TimePoly>>& m) {
    int n = static_cast<int>(m.size());
    std::vector<TimePoly> f(std::size_t(1) << n);
    f[0].c = {Rational(1)};
    for (unsigned s = 1; s < (1u << n); ++s) {
        int row = __builtin_popcount(s) - 1;
        TimePoly acc;
        int pos = 0;
        for (int j = 0; j < n; ++j) {
            if (!(s & (1u << j))) continue;
            TimePoly term = m[row][j] * f[s & ~(1u << j)];
            if ((row + pos) % 2 != 0) acc = acc - term;
            else acc = acc + term;
            ++pos;
        }
        f[s] = acc;
    }
    return f[(1u << n) - 1];
}

} // namespace

TimePoly transition_weight_poly(const RateSpec& r, const Partition& lambda,
                                const Partition& mu, int n) {
    std::vector<int> l = coords_checked(r, lambda, n, "transition_weight");
    std::vector<int> m = coords_checked(r, mu, n, "transition_weight");

    // exp(t*alpha) entrywise as polynomials: alpha is a single sub-band, so
    // entry (i, j) is t^{i-j}/(i-j)! times the product of the band rates.
    auto entry = [&](int i, int j) {
        TimePoly p;
        if (i < j) return p;
        int d = i - j;
        Rational coeff = Rational(1) / Rational(factorial(d));
        for (int s = j; s < i; ++s) coeff *= r.rate(s + 1);
        p.c.assign(d + 1, Rational(0));
        p.c[d] = coeff;
        return p;
    };
    std::vector<std::vector<TimePoly>> minor(n, std::vector<TimePoly>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) minor[a][b] = entry(l[a], m[b]);
    return poly_det(minor);
}

Rational transition_weight(const RateSpec& r, const Partition& lambda, const Partition& mu,
                           int n, const Rational& t) {
    std::vector<int> l = coords_checked(r, lambda, n, "transition_weight");
    std::vector<int> m = coords_checked(r, mu, n, "transition_weight");
    Matrix e = exp_nilpotent(generator(r), t);
    Matrix minor(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) minor(a, b) = e(l[a], m[b]);
    return det(minor);
}

Rational one_step_rate(const RateSpec& r, const Partition& lambda, const Partition& nu,
                       int n) {
    std::vector<int> l = coords_checked(r, lambda, n, "one_step_rate");
    std::vector<int> m = coords_checked(r, nu, n, "one_step_rate");
    int hops = 0, where = -1;
    for (int a = 0; a < n; ++a) {
        if (l[a] == m[a]) continue;
        if (l[a] == m[a] + 1) {
            ++hops;
            where = a;
        } else {
            return Rational(0);
        }
    }
    if (hops != 1) return Rational(0);
    return r.rate(m[where] + 1);
}

bool semigroup_check(const RateSpec& r, const Partition& lambda, const Partition& mu, int n,
                     const Rational& t) {
    TimePoly lhs = transition_weight_poly(r, lambda, mu, n).derivative();
    TimePoly rhs;
    // nu runs over lambda minus one box (the only states with M_{lambda nu} != 0).
    for (int a = 0; a < lambda.length(); ++a) {
        std::vector<int> parts = lambda.parts();
        parts[a] -= 1;
        if (a + 1 < lambda.length() && parts[a] < lambda.part(a + 1)) continue;
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        Partition nu(parts);
        Rational m = one_step_rate(r, lambda, nu, n);
        if (m == 0) continue;
        TimePoly w = transition_weight_poly(r, nu, mu, n);
        TimePoly scaled;
        scaled.c = {m};
        rhs = rhs + scaled * w;
    }
    if (!(lhs == rhs)) return false;
    return lhs.eval(t) == rhs.eval(t);
}

std::vector<Partition> reachable_states(const RateSpec& r, const Partition& mu, int n,
                                        int max_extra_weight) {
    std::vector<Partition> out;
    int cap = mu.weight() + max_extra_weight;
    for (const Partition& lam : enumerate_partitions(cap, n)) {
        if (!lam.contains(mu)) continue;
        if (lam.length() > n) continue;
        if (lam.first() + n - 1 >= r.truncation()) continue;
        out.push_back(lam);
    }
    return out;
}

DiscreteWeights discrete_time_weights(const RateSpec& r, const Partition& mu, int n,
                                      int steps) {
    if (steps < 0) throw shape_error("discrete_time_weights: steps must be >= 0");
    coords_checked(r, mu, n, "discrete_time_weights");

    std::map<Partition, Rational, PartitionOrder> cur;
    cur[mu] = 1;
    for (int s = 0; s < steps; ++s) {
        std::map<Partition, Rational, PartitionOrder> next;
        for (const auto& [nu, w] : cur) {
            for (int a = 0; a <= nu.length(); ++a) {
                if (a >= n) break;
                std::vector<int> parts = nu.parts();
                if (a == nu.length()) parts.push_back(1);
                else parts[a] += 1;
                if (a > 0 && parts[a] > parts[a - 1]) continue;
                Partition lam(parts);
                if (lam.first() + n - 1 >= r.truncation()) continue;
                Rational rate = one_step_rate(r, lam, nu, n);
                if (rate != 0) next[lam] += w * rate;
            }
        }
        cur.swap(next);
        if (cur.empty()) break;
    }

    DiscreteWeights dw;
    if (cur.empty()) {
        dw.absorbing = true;
        return dw;
    }
    Rational total = 0;
    for (const auto& [lam, w] : cur) total += w;
    for (auto& [lam, w] : cur) dw.weights[lam] = w / total;
    return dw;
}

} // namespace genschur
