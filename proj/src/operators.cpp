#include "hypersync/operators.hpp"

#include <cmath>
#include <set>

namespace hypersync {

IncidenceMatrix incidence(const Hypergraph& g) {
    IncidenceMatrix chi;
    chi.n_vertices = g.n_vertices();
    chi.n_edges = g.n_edges();
    chi.values.assign(static_cast<size_t>(chi.n_vertices) * chi.n_edges, 0.0);
    for (int e = 0; e < g.n_edges(); ++e)
        for (int u : g.edges()[e].vertices) chi.values[static_cast<size_t>(u) * chi.n_edges + e] = 1.0;
    return chi;
}

SymMatrix edge_operator(const Hyperedge& e, int n) {
    if (e.size() < 2) throw EmptyEdge("edge operator needs |e| >= 2");
    SymMatrix h(n);
    const double off = 1.0 / (e.size() - 1);
    for (int i = 0; i < e.size(); ++i) {
        const int u = e.vertices[i];
        if (u < 0 || u >= n) throw UnknownVertexLabel("edge vertex outside matrix dimension");
        h.at(u, u) = -1.0;
        for (int j = i + 1; j < e.size(); ++j) {
            const int v = e.vertices[j];
            h.set_sym(u, v, off);
        }
    }
    return h;
}

SymMatrix build_Lw(const Hypergraph& g) {
    SymMatrix lw(g.n_vertices());
    for (const Hyperedge& e : g.edges()) {
        const double off = e.weight / (e.size() - 1);
        for (int i = 0; i < e.size(); ++i) {
            const int u = e.vertices[i];
            lw.at(u, u) -= e.weight;
            for (int j = i + 1; j < e.size(); ++j) {
                const int v = e.vertices[j];
                lw.at(u, v) += off;
                lw.at(v, u) += off;
            }
        }
    }
    lw.symmetrize();
    return lw;
}

SymMatrix build_Bm(const Hypergraph& g, int m) {
    SymMatrix bm(g.n_vertices());
    const double inv_m = 1.0 / m;
    for (const Hyperedge& e : g.edges()) {
        if (e.size() != m) continue;
        // (1/m) chi_e chi_e^T - D_e for this edge's slice of E_m
        for (int i = 0; i < e.size(); ++i) {
            const int u = e.vertices[i];
            bm.at(u, u) += inv_m - 1.0;
            for (int j = i + 1; j < e.size(); ++j) {
                const int v = e.vertices[j];
                bm.at(u, v) += inv_m;
                bm.at(v, u) += inv_m;
            }
        }
    }
    bm.symmetrize();
    return bm;
}

SymMatrix build_C(const Hypergraph& g) {
    SymMatrix c(g.n_vertices());
    const int m_max = g.rank();
    for (int m = 2; m <= m_max; ++m) {
        const double factor = static_cast<double>(m) / (m - 1);
        const SymMatrix bm = build_Bm(g, m);
        for (int i = 0; i < c.n(); ++i)
            for (int j = 0; j < c.n(); ++j) c.at(i, j) += factor * bm.at(i, j);
    }
    c.symmetrize();
    return c;
}

SymMatrix clique_laplacian(const Hypergraph& g) {
    std::set<std::pair<int, int>> pairs;
    for (const Hyperedge& e : g.edges())
        for (int i = 0; i < e.size(); ++i)
            for (int j = i + 1; j < e.size(); ++j) pairs.emplace(e.vertices[i], e.vertices[j]);

    SymMatrix l(g.n_vertices());
    for (auto [u, v] : pairs) {
        l.set_sym(u, v, 1.0);
        l.at(u, u) -= 1.0;
        l.at(v, v) -= 1.0;
    }
    return l;
}

kernels::EdgePlan make_edge_plan(const Hypergraph& g) {
    kernels::EdgePlan plan;
    plan.n_vertices = g.n_vertices();
    plan.edge_offsets.reserve(g.n_edges() + 1);
    plan.edge_offsets.push_back(0);
    for (const Hyperedge& e : g.edges()) {
        plan.edge_vertices.insert(plan.edge_vertices.end(), e.vertices.begin(), e.vertices.end());
        plan.edge_offsets.push_back(static_cast<int>(plan.edge_vertices.size()));
        plan.edge_coeff.push_back(e.weight / (e.size() - 1));
    }
    plan.vert_offsets.assign(plan.n_vertices + 1, 0);
    for (int u = 0; u < plan.n_vertices; ++u)
        plan.vert_offsets[u + 1] = plan.vert_offsets[u] + static_cast<int>(g.incident_edges()[u].size());
    plan.vert_edges.reserve(plan.vert_offsets.back());
    for (int u = 0; u < plan.n_vertices; ++u)
        plan.vert_edges.insert(plan.vert_edges.end(), g.incident_edges()[u].begin(), g.incident_edges()[u].end());
    return plan;
}

std::vector<double> apply_pointwise(const Hypergraph& g, std::span<const double> x, int k) {
    if (k < 1 || static_cast<int>(x.size()) != g.n_vertices() * k)
        throw DimensionMismatch("state must hold one k-vector per vertex");
    const kernels::EdgePlan plan = make_edge_plan(g);
    std::vector<double> y(x.size());
    kernels::edge_apply(plan, x, k, y);
    return y;
}

double dirichlet_energy(const Hypergraph& g, std::span<const double> x, int k) {
    if (k < 1 || static_cast<int>(x.size()) != g.n_vertices() * k)
        throw DimensionMismatch("state must hold one k-vector per vertex");
    std::vector<double> terms;
    terms.reserve(g.n_edges());
    for (const Hyperedge& e : g.edges()) {
        double acc = 0.0;
        for (int i = 0; i < e.size(); ++i)
            for (int j = i + 1; j < e.size(); ++j) {
                const double* xu = x.data() + static_cast<size_t>(e.vertices[i]) * k;
                const double* xv = x.data() + static_cast<size_t>(e.vertices[j]) * k;
                for (int c = 0; c < k; ++c) {
                    const double d = xv[c] - xu[c];
                    acc += d * d;
                }
            }
        terms.push_back(e.weight / (e.size() - 1) * acc);
    }
    return kernels::blocked_sum(terms);
}

}  // namespace hypersync
