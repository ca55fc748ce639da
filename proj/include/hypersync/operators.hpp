#pragma once

#include <span>
#include <vector>

#include "hypersync/hypergraph.hpp"
#include "hypersync/kernels.hpp"
#include "hypersync/matrix.hpp"

namespace hypersync {

/// n_vertices x n_edges 0/1 incidence; column e has exactly |e| ones.
struct IncidenceMatrix {
    int n_vertices = 0;
    int n_edges = 0;
    std::vector<double> values;  // row-major

    double at(int u, int e) const { return values[static_cast<size_t>(u) * n_edges + e]; }
};

IncidenceMatrix incidence(const Hypergraph& g);

/// H_e = (|e|/(|e|-1)) ((1/|e|) chi_e chi_e^T - D_e): -1 on the diagonal of e,
/// 1/(|e|-1) off-diagonal inside e, zero outside.
SymMatrix edge_operator(const Hyperedge& e, int n);

/// L_w = sum_e w(e) H_e. Per-edge accumulation is sequential in edge order
/// (the assembly contract is bit-reproducible), then symmetrized.
SymMatrix build_Lw(const Hypergraph& g);

/// C = sum_m (m/(m-1)) B_m over the uniform slices; equals L_w at unit weights.
SymMatrix build_C(const Hypergraph& g);

/// B_m = (1/m) chi chi^T - D over the edges of size exactly m.
SymMatrix build_Bm(const Hypergraph& g, int m);

/// Negative graph Laplacian of the clique expansion: adjacency off-diagonal,
/// -deg on the diagonal.
SymMatrix clique_laplacian(const Hypergraph& g);

/// Matrix-free plan for the action of L_w (see kernels::edge_apply).
kernels::EdgePlan make_edge_plan(const Hypergraph& g);

/// (L_w x)(u) = sum_{e in E_u} w(e)/(|e|-1) sum_{v in e} (x(v) - x(u)),
/// without forming the matrix. x is n x k row-major (k defaults to scalar).
std::vector<double> apply_pointwise(const Hypergraph& g, std::span<const double> x, int k = 1);

/// sum_e w(e)/(|e|-1) sum_{{u,v} subset e} |x(v) - x(u)|^2. Always >= 0 and
/// equal to -<x, L_w x>; the operator itself is negative semidefinite.
double dirichlet_energy(const Hypergraph& g, std::span<const double> x, int k = 1);

}  // namespace hypersync
