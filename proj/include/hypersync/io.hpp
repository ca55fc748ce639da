#pragma once

#include <cstdint>
#include <string>

#include "hypersync/dynamics.hpp"
#include "hypersync/hypergraph.hpp"
#include "hypersync/maps.hpp"

namespace hypersync {

/// Edge-list text format: '#' comment lines; each data line is an optional
/// leading "w:<positive float>" token followed by whitespace-separated vertex
/// labels. Singleton edges are dropped (counted), their labels kept as
/// vertices. Vertices are numbered in order of first appearance.
struct ParseResult {
    Hypergraph hypergraph;
    int dropped_singletons = 0;
};

ParseResult parse_edge_list(const std::string& text);
ParseResult load_edge_list(const std::string& path);
std::string serialize_edge_list(const Hypergraph& g);

/// On-disk key=value run description; round-trips losslessly.
struct RunConfig {
    std::string scenario = "run";
    double epsilon = 1.0;
    int k = 1;
    MapKind f_kind = MapKind::identity;
    double f_param = 0.0;
    MapKind g_kind = MapKind::identity;
    double g_param = 0.0;
    double dt = 1e-2;
    double t_max = 10.0;
    long max_steps = 100000;
    double conv_tol = 1e-9;
    double div_tol = 1e12;
    long sample_every = 1;
    std::uint64_t seed = 1;
    std::string output;

    static RunConfig from_key_value(const std::string& text);
    static RunConfig load(const std::string& path);
    std::string to_key_value() const;

    MapSpec f() const;
    MapSpec g() const;
};

/// "%.17g": shortest text that parses back to the identical double.
std::string format_double(double v);

std::string trajectory_csv(const Trajectory& traj);
void export_trajectory_csv(const Trajectory& traj, const std::string& path);

std::string matrix_csv(const SymMatrix& m);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

/// Seeded random initial state, entries uniform in [-1, 1].
State random_state(int n, int k, std::uint64_t seed);

/// Deterministic connected hypergraph: a shallow random spanning phase plus
/// uniformly random extra edges. Weights are 1, or uniform in (0, 5] when
/// weighted is set.
Hypergraph random_connected_hypergraph(int n_vertices, int n_edges, int min_size, int max_size,
                                       std::uint64_t seed, bool weighted = false);

/// Synthetic stand-in matching the size statistics of the paper-scale
/// chemical-gene dataset (1808 vertices, 1431 hyperedges, sizes 2..6).
Hypergraph biogrid_like_hypergraph(std::uint64_t seed);

}  // namespace hypersync
