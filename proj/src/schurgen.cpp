#include "genschur/schurgen.hpp"

#include <algorithm>
#include <string>

#include "genschur/errors.hpp"
#include "genschur/symfun.hpp"

namespace genschur {

void require_distinct(const std::vector<Rational>& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (x[i] == x[j])
                throw singular_error("evaluation points must be pairwise distinct (got " +
                                     rat_str(x[i]) + " twice)");
}

Rational vandermonde(const std::vector<Rational>& x) {
    Rational v = 1;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) v *= x[i] - x[j];
    return v;
}

Rational bialternant(const PolyBasis& basis, const Partition& lambda,
                     const std::vector<Rational>& x) {
    int n = static_cast<int>(x.size());
    if (n < 1) throw shape_error("bialternant: need at least one evaluation point");
    if (lambda.length() > n)
        throw length_error("bialternant: partition length exceeds number of points");
    require_distinct(x);
    if (lambda.first() + n > basis.truncation())
        throw truncation_error("bialternant: need truncation N >= " +
                               std::to_string(lambda.first() + n) + ", have " +
                               std::to_string(basis.truncation()));
    std::vector<int> l = lambda.particle_coords(n, n);
    Matrix minor(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) minor(a, b) = basis.evaluate(l[a], x[b]);
    return det(minor) / vandermonde(x);
}

Rational classical_schur(const Partition& lambda, const std::vector<Rational>& x) {
    int n = static_cast<int>(x.size());
    return bialternant(PolyBasis::monomial(lambda.first() + n), lambda, x);
}

SchurExpansion expansion_coeffs(const PolyBasis& basis, const Partition& lambda, int n) {
    if (lambda.length() > n)
        throw length_error("expansion_coeffs: partition length exceeds n");
    if (lambda.first() + n > basis.truncation())
        throw truncation_error("expansion_coeffs: need truncation N >= " +
                               std::to_string(lambda.first() + n));
    std::vector<int> l = lambda.particle_coords(n, n);
    SchurExpansion out;
    for (const Partition& mu : enumerate_partitions(lambda.weight(), n)) {
        if (!lambda.contains(mu)) continue; // minor vanishes otherwise
        std::vector<int> m = mu.particle_coords(n, n);
        Matrix minor(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                minor(a, b) = (m[b] > l[a]) ? Rational(0) : basis.coeff(l[a], m[b]);
        Rational c = det(minor);
        if (c != 0) out.emplace(mu, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// H grid

const Rational& HMatrix::h(int sup, int m) const {
    if (sup < sup_lo_ || sup > sup_hi_)
        throw truncation_error("HMatrix: superscript " + std::to_string(sup) + " not stored");
    if (m < 1 - n_ || m > max_m_)
        throw truncation_error("HMatrix: subscript " + std::to_string(m) + " not stored");
    return cols_[sup - sup_lo_][m + n_ - 1];
}

HMatrix build_H(const PolyBasis& basis, const std::vector<Rational>& x, int max_m,
                int sup_hi, int sup_lo) {
    int n = static_cast<int>(x.size());
    if (n < 1) throw shape_error("build_H: need at least one evaluation point");
    if (sup_hi > n - 1 || sup_lo > 0 || max_m < 0)
        throw shape_error("build_H: superscripts must satisfy sup_lo <= 0 <= sup_hi <= n-1");
    require_distinct(x);

    int need = max_m + n + sup_hi;
    if (basis.truncation() < need)
        throw truncation_error("build_H: need truncation N >= " + std::to_string(need) +
                               ", have " + std::to_string(basis.truncation()));

    // Column for superscript 0, built sup_hi rows deeper than requested so
    // the upward recursion can shed one row per step.
    int len0 = max_m + n + sup_hi;
    std::vector<Rational> col0(len0);
    for (int r = 0; r < len0; ++r) {
        int m = r + 1 - n;
        if (m < 0)
            col0[r] = 0;
        else if (m == 0)
            col0[r] = 1;
        else
            col0[r] = bialternant(basis, Partition({m}), x);
    }

    RecursionData rd = basis.recursion();
    HMatrix H;
    H.n_ = n;
    H.sup_lo_ = sup_lo;
    H.sup_hi_ = sup_hi;
    H.max_m_ = max_m;
    H.cols_.assign(sup_hi - sup_lo + 1, {});

    std::vector<Rational> cur = col0;
    for (int sup = 0; sup <= sup_hi; ++sup) {
        H.cols_[sup - sup_lo] = cur;
        H.cols_[sup - sup_lo].resize(max_m + n);
        if (sup == sup_hi) break;
        int len = static_cast<int>(cur.size()) - 1;
        std::vector<Rational> next(len);
        for (int r = 0; r < len; ++r) {
            Rational s = 0;
            for (int c = 0; c <= r + 1; ++c)
                if (rd.J(r, c) != 0) s += rd.J(r, c) * cur[c];
            next[r] = s;
        }
        cur.swap(next);
    }

    cur = col0;
    cur.resize(max_m + n);
    for (int sup = -1; sup >= sup_lo; --sup) {
        int len = static_cast<int>(cur.size());
        std::vector<Rational> next(len);
        for (int r = 0; r < len; ++r) {
            Rational s = 0;
            for (int c = 0; c < r; ++c)
                if (rd.Jtilde(r, c) != 0) s += rd.Jtilde(r, c) * cur[c];
            next[r] = s;
        }
        cur.swap(next);
        H.cols_[sup - sup_lo] = cur;
    }
    return H;
}

Rational jacobi_trudi(const PolyBasis& basis, const Partition& lambda,
                      const std::vector<Rational>& x) {
    int n = static_cast<int>(x.size());
    int l = lambda.length();
    if (l > n) throw length_error("jacobi_trudi: partition length exceeds number of points");
    if (l == 0) return Rational(1);
    HMatrix H = build_H(basis, x, lambda.first(), l - 1);
    Matrix m(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) m(i, j) = H.h(j, lambda.part(i) - i);
    return det(m);
}

// ---------------------------------------------------------------------------
// E grid

const Rational& EMatrix::entry(int i, int j) const {
    if (i < row_lo_ || i > n_)
        throw truncation_error("EMatrix: row label " + std::to_string(i) + " not stored");
    if (j < 1 || j > width_)
        throw truncation_error("EMatrix: column " + std::to_string(j) + " not stored");
    return rows_[n_ - i][j - 1];
}

Rational EMatrix::gen_elementary(int m, int s) const {
    Rational v = entry(-s, n_ - m + 1);
    return ((s + m) % 2 != 0) ? -v : v;
}

EMatrix build_E(const PolyBasis& basis, const std::vector<Rational>& x, int row_lo,
                int width) {
    int n = static_cast<int>(x.size());
    if (n < 1) throw shape_error("build_E: need at least one evaluation point");
    if (row_lo > n) throw shape_error("build_E: row_lo must be <= n");
    require_distinct(x);
    int need = std::max(n - row_lo + 1, width);
    if (basis.truncation() < need)
        throw truncation_error("build_E: need truncation N >= " + std::to_string(need) +
                               ", have " + std::to_string(basis.truncation()));

    // Classical elementary symmetric functions e_0..e_n of x.
    std::vector<Rational> e(n + 1);
    e[0] = 1;
    for (int a = 0; a < n; ++a)
        for (int k = std::min(a + 1, n); k >= 1; --k) e[k] += e[k - 1] * x[a];

    Matrix inv = basis.inverse_coeffs();
    EMatrix E;
    E.n_ = n;
    E.row_lo_ = row_lo;
    E.width_ = width;
    E.rows_.assign(n - row_lo + 1, std::vector<Rational>(width));
    for (int i = n; i >= row_lo; --i) {
        for (int j = 1; j <= width; ++j) {
            Rational s = 0;
            int k_hi = n - i + 1; // e-index n-i-k+1 >= 0
            for (int k = std::max(j, 1); k <= k_hi; ++k) {
                int eidx = n - i - k + 1;
                if (eidx > n || e[eidx] == 0) continue;
                Rational term = e[eidx] * inv(k - 1, j - 1);
                s += (eidx % 2 != 0) ? -term : term; // sign (-1)^{n-i-k+1}
            }
            E.rows_[n - i][j - 1] = s;
        }
    }
    return E;
}

Rational dual_jacobi_trudi(const PolyBasis& basis, const Partition& lambda,
                           const std::vector<Rational>& x) {
    int n = static_cast<int>(x.size());
    if (lambda.length() > n)
        throw length_error("dual_jacobi_trudi: partition length exceeds number of points");
    Partition conj = lambda.conjugate();
    int l = conj.length();
    if (l == 0) return Rational(1);
    EMatrix E = build_E(basis, x, 1 - l, n + l);
    Matrix m(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) m(i, j) = E.gen_elementary(conj.part(j) - j, i);
    return det(m);
}

Rational giambelli(const PolyBasis& basis, const Partition& lambda,
                   const std::vector<Rational>& x) {
    if (lambda.length() > static_cast<int>(x.size()))
        throw length_error("giambelli: partition length exceeds number of points");
    Frobenius f = frobenius(lambda);
    int r = static_cast<int>(f.arms.size());
    if (r == 0) return Rational(1);
    Matrix m(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            m(i, j) = bialternant(basis, hook_partition(f.arms[i], f.legs[j]), x);
    return det(m);
}

FourRoutes four_routes(const PolyBasis& basis, const Partition& lambda,
                       const std::vector<Rational>& x) {
    FourRoutes fr{bialternant(basis, lambda, x), jacobi_trudi(basis, lambda, x),
                  dual_jacobi_trudi(basis, lambda, x), giambelli(basis, lambda, x), false};
    fr.agree = fr.bialternant == fr.jacobi_trudi && fr.bialternant == fr.dual &&
               fr.bialternant == fr.giambelli;
    return fr;
}

// ---------------------------------------------------------------------------
// Plucker / Giambelli relation on coordinate families

Rational CoordFamily::at(const Partition& p) const {
    if (p.weight() > max_weight || p.length() > max_length)
        throw incomplete_family_error("coordinate " + p.str() +
                                      " lies outside the declared family support");
    auto it = coords.find(p);
    return it == coords.end() ? Rational(0) : it->second;
}

bool pluecker_check(const CoordFamily& family, const Partition& lambda) {
    Frobenius f = frobenius(lambda);
    int r = static_cast<int>(f.arms.size());
    if (r == 0) return true;
    Matrix hooks(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            hooks(i, j) = family.at(hook_partition(f.arms[i], f.legs[j]));
    Rational lhs = family.at(lambda);
    Rational pi0 = family.at(Partition::zero());
    for (int i = 0; i < r - 1; ++i) lhs *= pi0;
    return lhs == det(hooks);
}

// ---------------------------------------------------------------------------
// identity checks

Matrix window_recursion_residual(const PolyBasis& basis, const std::vector<Rational>& x,
                                 int k) {
    int n = static_cast<int>(x.size());
    if (n + k + 1 > basis.truncation())
        throw truncation_error("window recursion: k + 1 window exceeds truncation");
    RecursionData rd = basis.recursion();
    int N = basis.truncation();
    if (n + k - 1 > N - 2)
        throw truncation_error("window recursion: J rows beyond the exact window");
    Matrix wk = basis.window(x, k);
    Matrix wk1 = basis.window(x, k + 1);
    Matrix lhs(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) lhs(a, b) = wk(a, b) * x[b];
    Matrix jpk(n, n);
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            int row = k + n - 1 - a, col = k + n - 1 - c;
            Rational v = rd.J(row, col);
            if (col == row + 1) v -= 1; // strip the upper-shift part
            jpk(a, c) = v;
        }
    return lhs - jpk * wk - wk1;
}

Matrix window_recursion_boundary(const PolyBasis& basis, const std::vector<Rational>& x,
                                 int k) {
    int n = static_cast<int>(x.size());
    RecursionData rd = basis.recursion();
    Matrix b(n, n);
    for (int a = 0; a < n; ++a) {
        int m = k + n - 1 - a;
        for (int j = 0; j < k; ++j) {
            Rational c = rd.J(m, j);
            if (j == m + 1) c -= 1;
            if (c == 0) continue;
            for (int col = 0; col < n; ++col) b(a, col) += c * basis.evaluate(j, x[col]);
        }
    }
    return b;
}

bool check_grassmannian(const PolyBasis& basis, const std::vector<Rational>& x, int depth) {
    int n = static_cast<int>(x.size());
    if (depth < n) throw shape_error("check_grassmannian: depth must be >= n");
    HMatrix H = build_H(basis, x, depth - n, n - 1);
    if (depth > basis.truncation())
        throw truncation_error("check_grassmannian: depth exceeds truncation");

    Matrix h_full(depth, n), phi_full(depth, n);
    for (int r = 0; r < depth; ++r)
        for (int c = 0; c < n; ++c) {
            h_full(r, c) = H.h(c, r + 1 - n);
            phi_full(r, c) = basis.evaluate(r, x[c]);
        }
    Matrix h0(n, n);
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) h0(a, c) = H.h(c, -a);
    Matrix t = invert_unitriangular(h0) * basis.window(x, 0);
    return h_full * t == phi_full;
}

bool check_h_dressing(const PolyBasis& basis, const std::vector<Rational>& x, int depth) {
    int n = static_cast<int>(x.size());
    if (depth > basis.truncation())
        throw truncation_error("check_h_dressing: depth exceeds truncation");
    HMatrix H = build_H(basis, x, depth - n, n - 1);
    HMatrix H0 = build_H(PolyBasis::monomial(basis.truncation()), x, depth - n, n - 1);
    for (int r = 0; r < depth; ++r)
        for (int c = 0; c < n; ++c) {
            Rational s = 0;
            for (int k = 0; k <= r; ++k)
                if (basis.coeff(r, k) != 0) s += basis.coeff(r, k) * H0.h(c, k + 1 - n);
            if (s != H.h(c, r + 1 - n)) return false;
        }
    return true;
}

bool check_eh_identity(const PolyBasis& basis, const std::vector<Rational>& x, int i_lo) {
    int n = static_cast<int>(x.size());
    EMatrix E = build_E(basis, x, i_lo, n - i_lo + 1);
    HMatrix H = build_H(basis, x, 1 - i_lo, n - 1);
    for (int i = i_lo; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Rational s = 0;
            for (int k = 1; k <= n - i + 1; ++k) s += E.entry(i, k) * H.h(j - 1, k - n);
            if (s != Rational(i == j ? 1 : 0)) return false;
        }
    return true;
}

bool check_he_identity(const PolyBasis& basis, const std::vector<Rational>& x, int i_max) {
    int n = static_cast<int>(x.size());
    HMatrix H = build_H(basis, x, std::max(0, i_max - n), n - 1, std::min(0, n - i_max));
    EMatrix E = build_E(basis, x, n + 1 - i_max, i_max);
    for (int i = 1; i <= i_max; ++i)
        for (int j = 1; j <= i_max; ++j) {
            Rational s = 0;
            for (int k = n + 1 - i; k <= n; ++k) s += H.h(k - 1, i - n) * E.entry(k, j);
            if (s != Rational(i == j ? 1 : 0)) return false;
        }
    return true;
}

bool check_cauchy_binet(const PolyBasis& basis, const Partition& lambda,
                        const std::vector<Rational>& x) {
    int n = static_cast<int>(x.size());
    SchurExpansion coeffs = expansion_coeffs(basis, lambda, n);
    Rational sum = 0;
    for (const auto& [mu, c] : coeffs) sum += c * classical_schur(mu, x);
    return sum == bialternant(basis, lambda, x);
}

} // namespace genschur
