#include "hypersync/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_map>
#include <utility>

namespace hypersync {

namespace {

void check_edge_invariants(const Hyperedge& e, int n) {
    if (e.size() < 2) throw EmptyEdge("hyperedge must contain at least two vertices");
    for (int i = 0; i < e.size(); ++i) {
        if (e.vertices[i] < 0 || e.vertices[i] >= n) throw UnknownVertexLabel("vertex index out of range");
        if (i > 0 && e.vertices[i] == e.vertices[i - 1])
            throw DuplicateVertexInEdge("hyperedge repeats a vertex");
        if (i > 0 && e.vertices[i] < e.vertices[i - 1]) throw Error("hyperedge vertices must be sorted");
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) throw NonpositiveWeight("edge weight must be positive");
}

}  // namespace

Hypergraph Hypergraph::validate(const std::vector<std::string>& labels, const std::vector<RawEdge>& edges) {
    Hypergraph g;
    g.n_vertices_ = static_cast<int>(labels.size());
    if (g.n_vertices_ <= 0) throw Error("hypergraph needs at least one vertex");
    g.labels_ = labels;

    std::unordered_map<std::string, int> index;
    index.reserve(labels.size());
    for (int i = 0; i < g.n_vertices_; ++i) {
        if (!index.emplace(labels[i], i).second) throw DuplicateLabel("duplicate vertex label: " + labels[i]);
    }

    g.edges_.reserve(edges.size());
    for (const RawEdge& raw : edges) {
        Hyperedge e;
        e.weight = raw.weight;
        e.vertices.reserve(raw.vertices.size());
        for (const std::string& name : raw.vertices) {
            auto it = index.find(name);
            if (it == index.end()) throw UnknownVertexLabel("unknown vertex label: " + name);
            e.vertices.push_back(it->second);
        }
        std::sort(e.vertices.begin(), e.vertices.end());
        for (size_t i = 1; i < e.vertices.size(); ++i)
            if (e.vertices[i] == e.vertices[i - 1]) throw DuplicateVertexInEdge("hyperedge repeats a vertex");
        check_edge_invariants(e, g.n_vertices_);
        g.edges_.push_back(std::move(e));
    }
    g.build_incidence_index();
    return g;
}

Hypergraph Hypergraph::from_indices(int n_vertices, std::vector<Hyperedge> edges, std::vector<std::string> labels) {
    Hypergraph g;
    if (n_vertices <= 0) throw Error("hypergraph needs at least one vertex");
    g.n_vertices_ = n_vertices;
    if (labels.empty()) {
        labels.reserve(n_vertices);
        for (int i = 0; i < n_vertices; ++i) labels.push_back("v" + std::to_string(i));
    }
    if (static_cast<int>(labels.size()) != n_vertices) throw Error("label count mismatch");
    g.labels_ = std::move(labels);
    for (Hyperedge& e : edges) {
        std::sort(e.vertices.begin(), e.vertices.end());
        check_edge_invariants(e, n_vertices);
    }
    g.edges_ = std::move(edges);
    g.build_incidence_index();
    return g;
}

void Hypergraph::build_incidence_index() {
    incident_.assign(n_vertices_, {});
    for (int e = 0; e < n_edges(); ++e)
        for (int u : edges_[e].vertices) incident_[u].push_back(e);
}

int Hypergraph::degree(int u) const {
    if (u < 0 || u >= n_vertices_) throw UnknownVertexLabel("vertex index out of range");
    return static_cast<int>(incident_[u].size());
}

int Hypergraph::rank() const {
    int m = 0;
    for (const Hyperedge& e : edges_) m = std::max(m, e.size());
    return m;
}

bool Hypergraph::is_uniform() const {
    if (edges_.empty()) return false;
    const int m = edges_.front().size();
    return std::all_of(edges_.begin(), edges_.end(), [m](const Hyperedge& e) { return e.size() == m; });
}

std::vector<int> Hypergraph::component_labels() const {
    std::vector<int> comp(n_vertices_, -1);
    std::vector<char> edge_seen(edges_.size(), 0);
    int next = 0;
    for (int s = 0; s < n_vertices_; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int e : incident_[u]) {
                if (edge_seen[e]) continue;
                edge_seen[e] = 1;
                for (int v : edges_[e].vertices) {
                    if (comp[v] == -1) {
                        comp[v] = next;
                        queue.push_back(v);
                    }
                }
            }
        }
        ++next;
    }
    return comp;
}

bool Hypergraph::is_connected() const {
    const std::vector<int> comp = component_labels();
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

int Hypergraph::diameter() const {
    if (!is_connected()) throw DisconnectedHypergraph("diameter needs a connected hypergraph");
    int best = 0;
    std::vector<int> dist(n_vertices_);
    for (int s = 0; s < n_vertices_; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            best = std::max(best, dist[u]);
            for (int e : incident_[u])
                for (int v : edges_[e].vertices)
                    if (dist[v] == -1) {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
        }
    }
    return best;
}

Hypergraph Hypergraph::clique_expansion() const {
    std::vector<std::pair<int, int>> pairs;
    for (const Hyperedge& e : edges_)
        for (int i = 0; i < e.size(); ++i)
            for (int j = i + 1; j < e.size(); ++j) pairs.emplace_back(e.vertices[i], e.vertices[j]);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    std::vector<Hyperedge> out;
    out.reserve(pairs.size());
    for (auto [u, v] : pairs) out.push_back(Hyperedge{{u, v}, 1.0});
    return from_indices(n_vertices_, std::move(out), labels_);
}

HypergraphComponent Hypergraph::largest_connected_component() const {
    const std::vector<int> comp = component_labels();
    const int n_comp = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
    std::vector<int> size(n_comp, 0);
    for (int c : comp) ++size[c];
    // components are numbered by first-seen vertex, so the first maximal one
    // is the tie-break winner (smallest original index)
    int best = 0;
    for (int c = 1; c < n_comp; ++c)
        if (size[c] > size[best]) best = c;

    HypergraphComponent result;
    result.to_original.reserve(size[best]);
    std::vector<int> to_new(n_vertices_, -1);
    std::vector<std::string> labels;
    for (int u = 0; u < n_vertices_; ++u)
        if (comp[u] == best) {
            to_new[u] = static_cast<int>(result.to_original.size());
            result.to_original.push_back(u);
            labels.push_back(labels_[u]);
        }

    std::vector<Hyperedge> edges;
    for (const Hyperedge& e : edges_) {
        if (comp[e.vertices.front()] != best) continue;
        Hyperedge mapped;
        mapped.weight = e.weight;
        for (int u : e.vertices) mapped.vertices.push_back(to_new[u]);
        edges.push_back(std::move(mapped));
    }
    result.sub = from_indices(static_cast<int>(result.to_original.size()), std::move(edges), std::move(labels));
    return result;
}

bool Hypergraph::has_all_unit_weights() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Hyperedge& e) { return e.weight == 1.0; });
}

}  // namespace hypersync
