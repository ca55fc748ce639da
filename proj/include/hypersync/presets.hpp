#pragma once

#include <string>

#include "hypersync/hypergraph.hpp"

namespace hypersync {

/// The worked comparison scenarios, reproducible end to end. Each returns a
/// key=value report; when output_dir is nonempty, trajectory CSVs land there.
/// Reports are pure functions of the built-in seeds: identical bytes per run.
///
/// Names: triangle-vs-clique, eight-vertex, lipschitz-sine, expsin.
std::string run_preset(const std::string& name, const std::string& output_dir = "");

/// The 3-vertex single-edge example and its triangle-graph approximation.
Hypergraph triangle_hypergraph();

/// The 8-vertex example with hyperedges {1,2,3,4}, {2,5,6}, {3,7,8}.
Hypergraph eight_vertex_hypergraph();

/// Connected synthetic hypergraph rescaled so ||L_w|| equals target_norm.
Hypergraph scaled_synthetic_hypergraph(double target_norm, std::uint64_t seed, int n_vertices = 40,
                                       int n_edges = 120);

}  // namespace hypersync
