#include "genschur/moments.hpp"

#include <algorithm>
#include <functional>

#include "genschur/errors.hpp"
#include "genschur/schurgen.hpp"

namespace genschur {

DiscreteMeasure::DiscreteMeasure(std::vector<Rational> n, std::vector<Rational> w)
    : nodes(std::move(n)), weights(std::move(w)) {
    if (nodes.size() != weights.size())
        throw shape_error("measure: nodes and weights differ in length");
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i] == nodes[j]) throw shape_error("measure: nodes must be distinct");
}

Rational DiscreteMeasure::moment(int k) const {
    Rational m = 0;
    for (std::size_t c = 0; c < nodes.size(); ++c) {
        Rational p = 1;
        for (int i = 0; i < k; ++i) p *= nodes[c];
        m += weights[c] * p;
    }
    return m;
}

Rational BiMeasure::bimoment(int i, int j) const {
    Rational m = 0;
    for (const Point& p : points) {
        Rational zi = 1, wj = 1;
        for (int a = 0; a < i; ++a) zi *= p.z;
        for (int a = 0; a < j; ++a) wj *= p.w;
        m += p.weight * zi * wj;
    }
    return m;
}

Matrix hankel(const DiscreteMeasure& mu, int size) {
    if (size < 1) throw shape_error("hankel: size must be >= 1");
    std::vector<Rational> m(2 * size - 1);
    for (int k = 0; k < 2 * size - 1; ++k) m[k] = mu.moment(k);
    Matrix h(size, size);
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) h(a, b) = m[a + b];
    return h;
}

Rational B_coefficient(const DiscreteMeasure& mu, const Partition& lambda, int n) {
    if (lambda.length() > n) throw length_error("B_coefficient: partition length exceeds n");
    std::vector<int> l = lambda.particle_coords(n, n);
    std::reverse(l.begin(), l.end()); // ascending rows, classical at lambda=(0)
    int max_idx = l.back() + n - 1;
    std::vector<Rational> m(max_idx + 1);
    for (int k = 0; k <= max_idx; ++k) m[k] = mu.moment(k);
    Matrix b(n, n);
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) b(a, c) = m[l[a] + c];
    return det(b);
}

Rational eigenvalue_sum(const DiscreteMeasure& mu, int n, const FlowVector& t, int cutoff) {
    if (n < 1) throw shape_error("eigenvalue_sum: n must be >= 1");
    int d = static_cast<int>(mu.nodes.size());
    Rational total = 0;
    std::vector<int> idx(n, 0);
    std::vector<Partition> lambdas;
    if (!t.empty()) lambdas = enumerate_partitions(cutoff, n);

    std::function<void(int)> walk = [&](int pos) {
        if (pos == n) {
            std::vector<Rational> z(n);
            Rational w = 1;
            for (int a = 0; a < n; ++a) {
                z[a] = mu.nodes[idx[a]];
                w *= mu.weights[idx[a]];
            }
            Rational delta = vandermonde(z);
            if (delta == 0) return; // repeated node, excluded volume
            Rational factor = 1;
            if (!t.empty()) {
                factor = 0;
                FlowVector zt = monomial_sums(z, std::max(1, cutoff));
                for (const Partition& lam : lambdas)
                    factor += schur_t(lam, t) * schur_t(lam, zt);
            }
            total += delta * delta * w * factor;
            return;
        }
        for (idx[pos] = 0; idx[pos] < d; ++idx[pos]) walk(pos + 1);
    };
    walk(0);
    return total / Rational(factorial(n));
}

Matrix bimoment(const BiMeasure& mu2, int size) {
    if (size < 1) throw shape_error("bimoment: size must be >= 1");
    Matrix m(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) m(i, j) = mu2.bimoment(i, j);
    return m;
}

Rational B2_coefficient(const BiMeasure& mu2, const Partition& lambda, const Partition& nu,
                        int n) {
    if (lambda.length() > n || nu.length() > n)
        throw length_error("B2_coefficient: partition length exceeds n");
    std::vector<int> l = lambda.particle_coords(n, n);
    std::vector<int> m = nu.particle_coords(n, n);
    Matrix b(n, n);
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) b(a, c) = mu2.bimoment(l[a], m[c]);
    return det(b);
}

PolyBasis monic_orthogonal(const DiscreteMeasure& mu, int k) {
    if (k < 1) throw shape_error("monic_orthogonal: k must be >= 1");
    for (int r = 1; r <= k; ++r)
        if (det(hankel(mu, r)) == 0)
            throw degeneracy_error("monic_orthogonal: Hankel minor of size " +
                                   std::to_string(r) + " vanishes");

    auto inner = [&](const std::vector<Rational>& p, const std::vector<Rational>& q) {
        Rational s = 0;
        for (std::size_t c = 0; c < mu.nodes.size(); ++c) {
            Rational pv = 0, qv = 0;
            for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
                pv = pv * mu.nodes[c] + p[i];
            for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i)
                qv = qv * mu.nodes[c] + q[i];
            s += mu.weights[c] * pv * qv;
        }
        return s;
    };

    std::vector<std::vector<Rational>> polys; // coefficient rows, ascending degree
    std::vector<Rational> norms;
    for (int i = 0; i < k; ++i) {
        std::vector<Rational> p(i + 1);
        p[i] = 1; // monomial x^i
        for (int j = 0; j < i; ++j) {
            Rational c = inner(p, polys[j]) / norms[j];
            for (std::size_t d = 0; d < polys[j].size(); ++d) p[d] -= c * polys[j][d];
        }
        norms.push_back(inner(p, p));
        polys.push_back(std::move(p));
    }

    Matrix coeffs(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= i; ++j) coeffs(i, j) = polys[i][j];
    return PolyBasis::from_coeffs(coeffs);
}

Matrix gram_matrix(const PolyBasis& basis) {
    const Matrix& a = basis.coeffs();
    return a.transpose() * a;
}

Rational moment_minor(const Matrix& m, const Partition& lambda, const Partition& mu, int n) {
    if (lambda.length() > n || mu.length() > n)
        throw length_error("moment_minor: partition length exceeds n");
    std::vector<int> l = lambda.particle_coords(n, n);
    std::vector<int> c = mu.particle_coords(n, n);
    if (l[0] >= static_cast<int>(m.rows()) || c[0] >= static_cast<int>(m.cols()))
        throw truncation_error("moment_minor: particle coordinates exceed matrix size");
    Matrix b(n, n);
    for (int a = 0; a < n; ++a)
        for (int d = 0; d < n; ++d) b(a, d) = m(l[a], c[d]);
    return det(b);
}

} // namespace genschur
