#pragma once

#include <string>
#include <vector>

#include "hypersync/errors.hpp"

namespace hypersync {

/// A hyperedge: sorted duplicate-free vertex indices, |vertices| >= 2,
/// strictly positive weight.
struct Hyperedge {
    std::vector<int> vertices;
    double weight = 1.0;

    int size() const { return static_cast<int>(vertices.size()); }
};

struct RawEdge {
    std::vector<std::string> vertices;
    double weight = 1.0;
};

struct HypergraphComponent;

/// Finite weighted hypergraph. Vertices are externally strings, internally
/// dense 0-based indices; immutable after construction, so concurrent reads
/// are safe. Duplicate hyperedges are allowed (their contributions add up);
/// duplicate vertices within one edge are rejected.
class Hypergraph {
  public:
    /// Empty placeholder; real instances come from validate/from_indices.
    Hypergraph() = default;

    /// Validate raw labeled input against all invariants.
    static Hypergraph validate(const std::vector<std::string>& labels, const std::vector<RawEdge>& edges);

    /// Index-based construction (labels auto-generated as v0..v{n-1} when omitted).
    static Hypergraph from_indices(int n_vertices, std::vector<Hyperedge> edges,
                                   std::vector<std::string> labels = {});

    int n_vertices() const { return n_vertices_; }
    int n_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Hyperedge>& edges() const { return edges_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int u) const { return labels_[u]; }

    /// Number of hyperedges containing u.
    int degree(int u) const;

    /// Maximum hyperedge cardinality (0 for an empty edge set).
    int rank() const;

    bool is_uniform() const;

    /// True iff every pair of vertices is joined by a path of consecutively
    /// hyperedge-adjacent vertices (BFS over the vertex-edge incidence).
    bool is_connected() const;

    /// Max over pairs of the shortest adjacency path length. BFS from every
    /// vertex; throws DisconnectedHypergraph.
    int diameter() const;

    /// Simple unit-weight graph joining every pair that co-occurs in some edge.
    Hypergraph clique_expansion() const;

    /// Induced sub-hypergraph on the largest component, relabeled contiguously.
    /// Size ties go to the component containing the smallest original index.
    HypergraphComponent largest_connected_component() const;

    /// Per-vertex lists of incident edge ids, built once at construction.
    const std::vector<std::vector<int>>& incident_edges() const { return incident_; }

    bool has_all_unit_weights() const;

  private:
    void build_incidence_index();
    std::vector<int> component_labels() const;  // per-vertex component id

    int n_vertices_ = 0;
    std::vector<std::string> labels_;
    std::vector<Hyperedge> edges_;
    std::vector<std::vector<int>> incident_;
};

struct HypergraphComponent {
    Hypergraph sub;
    std::vector<int> to_original;  // to_original[new index] = original index
};

}  // namespace hypersync
