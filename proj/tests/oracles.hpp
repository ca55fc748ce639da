// Test-only oracles, independent of the library's Jacobi path: eigenvalues of
// a symmetric matrix via Householder tridiagonalization plus Sturm-count
// bisection on the characteristic polynomial, and small generators for
// randomized properties.
#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "hypersync/hypergraph.hpp"
#include "hypersync/matrix.hpp"

namespace hypersync::oracles {

// Golub & Van Loan style Householder reduction to tridiagonal (d, e).
inline void householder_tridiag(const SymMatrix& m, std::vector<double>& d, std::vector<double>& e) {
    const int n = m.n();
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    for (int k = 0; k + 2 < n; ++k) {
        const int len = n - k - 1;
        std::vector<double> x(len);
        for (int i = 0; i < len; ++i) x[i] = a[k + 1 + i][k];

        double sigma = 0.0;
        for (int i = 1; i < len; ++i) sigma += x[i] * x[i];
        std::vector<double> v = x;
        v[0] = 1.0;
        double beta = 0.0;
        if (sigma != 0.0 || x[0] < 0.0) {
            const double mu = std::sqrt(x[0] * x[0] + sigma);
            const double v0 = x[0] <= 0.0 ? x[0] - mu : -sigma / (x[0] + mu);
            if (v0 != 0.0) {
                beta = 2.0 * v0 * v0 / (sigma + v0 * v0);
                for (int i = 1; i < len; ++i) v[i] = x[i] / v0;
            }
        }

        // p = beta * A22 v; w = p - (beta p.v / 2) v; A22 -= v w^T + w v^T
        std::vector<double> p(len, 0.0);
        for (int i = 0; i < len; ++i) {
            double acc = 0.0;
            for (int j = 0; j < len; ++j) acc += a[k + 1 + i][k + 1 + j] * v[j];
            p[i] = beta * acc;
        }
        double pv = 0.0;
        for (int i = 0; i < len; ++i) pv += p[i] * v[i];
        std::vector<double> w(len);
        for (int i = 0; i < len; ++i) w[i] = p[i] - 0.5 * beta * pv * v[i];

        // this v-choice reflects x onto +||x|| e1 in every case
        const double norm_x = std::sqrt(x[0] * x[0] + sigma);
        a[k + 1][k] = norm_x;
        a[k][k + 1] = norm_x;
        for (int i = 2; i < len + 1; ++i) {
            a[k + i][k] = 0.0;
            a[k][k + i] = 0.0;
        }
        for (int i = 0; i < len; ++i)
            for (int j = 0; j < len; ++j)
                a[k + 1 + i][k + 1 + j] -= v[i] * w[j] + w[i] * v[j];
    }

    d.resize(n);
    e.assign(std::max(0, n - 1), 0.0);
    for (int i = 0; i < n; ++i) d[i] = a[i][i];
    for (int i = 0; i + 1 < n; ++i) e[i] = a[i + 1][i];
}

// Number of eigenvalues of the tridiagonal strictly below x (Sturm count).
inline int sturm_count(const std::vector<double>& d, const std::vector<double>& e, double x) {
    const int n = static_cast<int>(d.size());
    int count = 0;
    double q = d[0] - x;
    if (q < 0.0) ++count;
    for (int i = 1; i < n; ++i) {
        if (q == 0.0) q = 1e-300;
        q = d[i] - x - e[i - 1] * e[i - 1] / q;
        if (q < 0.0) ++count;
    }
    return count;
}

/// Ascending eigenvalues by bisection; handles multiplicities exactly.
inline std::vector<double> eigenvalues_bisection(const SymMatrix& m) {
    const int n = m.n();
    if (n == 1) return {m.at(0, 0)};
    std::vector<double> d, e;
    householder_tridiag(m, d, e);

    double lo = d[0], hi = d[0];
    for (int i = 0; i < n; ++i) {
        const double left = i > 0 ? std::abs(e[i - 1]) : 0.0;
        const double right = i + 1 < n ? std::abs(e[i]) : 0.0;
        lo = std::min(lo, d[i] - left - right);
        hi = std::max(hi, d[i] + left + right);
    }
    lo -= 1e-10;
    hi += 1e-10;

    std::vector<double> eig(n);
    for (int k = 0; k < n; ++k) {
        double a = lo, b = hi;
        for (int it = 0; it < 200 && b - a > 1e-14 * std::max(1.0, std::max(std::abs(a), std::abs(b)));
             ++it) {
            const double mid = 0.5 * (a + b);
            if (sturm_count(d, e, mid) >= k + 1)
                b = mid;
            else
                a = mid;
        }
        eig[k] = 0.5 * (a + b);
    }
    return eig;
}

inline SymMatrix random_symmetric(int n, std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> dist(-scale, scale);
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set_sym(i, j, dist(rng));
    return m;
}

inline std::vector<double> random_vector(int n, std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> dist(-scale, scale);
    std::vector<double> v(n);
    for (double& x : v) x = dist(rng);
    return v;
}

/// Disjoint union with shifted indices (a disconnected instance by design).
inline Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
    std::vector<Hyperedge> edges = a.edges();
    for (Hyperedge e : b.edges()) {
        for (int& v : e.vertices) v += a.n_vertices();
        edges.push_back(std::move(e));
    }
    std::vector<std::string> labels;
    for (const std::string& l : a.labels()) labels.push_back("a." + l);
    for (const std::string& l : b.labels()) labels.push_back("b." + l);
    return Hypergraph::from_indices(a.n_vertices() + b.n_vertices(), std::move(edges), std::move(labels));
}

}  // namespace hypersync::oracles
