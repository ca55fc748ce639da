#include "hypersync/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

namespace hypersync {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) tokens.push_back(tok);
    return tokens;
}

}  // namespace

ParseResult parse_edge_list(const std::string& text) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    auto intern = [&](const std::string& name) {
        auto it = index.find(name);
        if (it != index.end()) return it->second;
        const int id = static_cast<int>(labels.size());
        labels.push_back(name);
        index.emplace(name, id);
        return id;
    };

    std::vector<Hyperedge> edges;
    int dropped = 0;
    int line_no = 0;
    bool saw_data = false;

    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;

        std::vector<std::string> tokens = tokenize(line);
        double weight = 1.0;
        if (!tokens.empty() && tokens.front().rfind("w:", 0) == 0) {
            const std::string num = tokens.front().substr(2);
            char* end = nullptr;
            weight = std::strtod(num.c_str(), &end);
            if (end == num.c_str() || *end != '\0' || !std::isfinite(weight))
                throw ParseError(line_no, "bad weight token '" + tokens.front() + "'");
            if (!(weight > 0.0)) throw ParseError(line_no, "edge weight must be positive");
            tokens.erase(tokens.begin());
        }
        if (tokens.empty()) throw ParseError(line_no, "weight token without vertices");
        saw_data = true;

        if (tokens.size() == 1) {
            intern(tokens.front());  // keep the vertex, drop the edge
            ++dropped;
            continue;
        }
        Hyperedge e;
        e.weight = weight;
        for (const std::string& name : tokens) e.vertices.push_back(intern(name));
        std::sort(e.vertices.begin(), e.vertices.end());
        for (size_t i = 1; i < e.vertices.size(); ++i)
            if (e.vertices[i] == e.vertices[i - 1])
                throw ParseError(line_no, "vertex repeated within one hyperedge");
        edges.push_back(std::move(e));
    }
    if (!saw_data) throw EmptyFile("edge list has no data lines");

    ParseResult result;
    result.hypergraph = Hypergraph::from_indices(static_cast<int>(labels.size()), std::move(edges), labels);
    result.dropped_singletons = dropped;
    return result;
}

ParseResult load_edge_list(const std::string& path) { return parse_edge_list(read_text_file(path)); }

std::string serialize_edge_list(const Hypergraph& g) {
    std::ostringstream os;
    for (const Hyperedge& e : g.edges()) {
        if (e.weight != 1.0) os << "w:" << format_double(e.weight) << " ";
        for (int i = 0; i < e.size(); ++i) {
            if (i > 0) os << " ";
            os << g.label(e.vertices[i]);
        }
        os << "\n";
    }
    return os.str();
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

namespace {

const char* kConfigKeys =
    "scenario epsilon k f.kind f.param g.kind g.param dt t_max max_steps conv_tol div_tol sample_every "
    "seed output";

}  // namespace

RunConfig RunConfig::from_key_value(const std::string& text) {
    RunConfig cfg;
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(line_no, "expected key=value");
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        try {
            if (key == "scenario") cfg.scenario = value;
            else if (key == "epsilon") cfg.epsilon = std::stod(value);
            else if (key == "k") cfg.k = std::stoi(value);
            else if (key == "f.kind") cfg.f_kind = map_kind_from_name(value);
            else if (key == "f.param") cfg.f_param = std::stod(value);
            else if (key == "g.kind") cfg.g_kind = map_kind_from_name(value);
            else if (key == "g.param") cfg.g_param = std::stod(value);
            else if (key == "dt") cfg.dt = std::stod(value);
            else if (key == "t_max") cfg.t_max = std::stod(value);
            else if (key == "max_steps") cfg.max_steps = std::stol(value);
            else if (key == "conv_tol") cfg.conv_tol = std::stod(value);
            else if (key == "div_tol") cfg.div_tol = std::stod(value);
            else if (key == "sample_every") cfg.sample_every = std::stol(value);
            else if (key == "seed") cfg.seed = std::stoull(value);
            else if (key == "output") cfg.output = value;
            else throw ParseError(line_no, "unknown config key '" + key + "' (known: " + kConfigKeys + ")");
        } catch (const ParseError&) {
            throw;
        } catch (const Error&) {
            throw ParseError(line_no, "bad value for " + key);
        } catch (const std::exception&) {
            throw ParseError(line_no, "bad value for " + key);
        }
    }
    return cfg;
}

RunConfig RunConfig::load(const std::string& path) { return from_key_value(read_text_file(path)); }

std::string RunConfig::to_key_value() const {
    std::ostringstream os;
    os << "scenario=" << scenario << "\n";
    os << "epsilon=" << format_double(epsilon) << "\n";
    os << "k=" << k << "\n";
    os << "f.kind=" << map_kind_name(f_kind) << "\n";
    os << "f.param=" << format_double(f_param) << "\n";
    os << "g.kind=" << map_kind_name(g_kind) << "\n";
    os << "g.param=" << format_double(g_param) << "\n";
    os << "dt=" << format_double(dt) << "\n";
    os << "t_max=" << format_double(t_max) << "\n";
    os << "max_steps=" << max_steps << "\n";
    os << "conv_tol=" << format_double(conv_tol) << "\n";
    os << "div_tol=" << format_double(div_tol) << "\n";
    os << "sample_every=" << sample_every << "\n";
    os << "seed=" << seed << "\n";
    os << "output=" << output << "\n";
    return os.str();
}

namespace {
MapSpec make_map(MapKind kind, double param) {
    switch (kind) {
        case MapKind::identity: return MapSpec::identity();
        case MapKind::zero: return MapSpec::zero();
        case MapKind::linear: return MapSpec::linear(param);
        case MapKind::sine: return MapSpec::sine(param);
        case MapKind::cosine: return MapSpec::cosine(param);
        case MapKind::expsin: return MapSpec::expsin(param);
        case MapKind::logistic: return MapSpec::logistic(param);
    }
    return MapSpec::identity();
}
}  // namespace

MapSpec RunConfig::f() const { return make_map(f_kind, f_param); }
MapSpec RunConfig::g() const { return make_map(g_kind, g_param); }

std::string trajectory_csv(const Trajectory& traj) {
    std::ostringstream os;
    os << "time,vertex,component,value,sync_error\n";
    for (const TrajectorySample& sample : traj.samples) {
        const std::string time = format_double(sample.time);
        const std::string err = format_double(sample.sync_error);
        for (int u = 0; u < traj.n_vertices; ++u)
            for (int c = 0; c < traj.k; ++c)
                os << time << "," << u << "," << c << ","
                   << format_double(sample.x[static_cast<size_t>(u) * traj.k + c]) << "," << err << "\n";
    }
    return os.str();
}

void export_trajectory_csv(const Trajectory& traj, const std::string& path) {
    write_text_file(path, trajectory_csv(traj));
}

std::string matrix_csv(const SymMatrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.n(); ++i) {
        for (int j = 0; j < m.n(); ++j) {
            if (j > 0) os << ",";
            os << format_double(m.at(i, j));
        }
        os << "\n";
    }
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << text;
    if (!out) throw IoError("write failed for " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

State random_state(int n, int k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    std::vector<double> values(static_cast<size_t>(n) * k);
    for (double& v : values) v = uniform(rng);
    return State::from_values(std::move(values), n, k);
}

Hypergraph random_connected_hypergraph(int n_vertices, int n_edges, int min_size, int max_size,
                                       std::uint64_t seed, bool weighted) {
    if (n_vertices < 2 || min_size < 2 || max_size < min_size || max_size > n_vertices)
        throw Error("bad generator parameters");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size_dist(min_size, max_size);

    std::vector<int> perm(n_vertices);
    for (int i = 0; i < n_vertices; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);

    std::vector<Hyperedge> edges;
    // spanning phase: each new edge anchors at already-covered vertices, which
    // keeps the skeleton shallow; short tails are padded with extra anchors so
    // every edge respects min_size
    int covered = 1;
    while (covered < n_vertices) {
        const int want = size_dist(rng);
        const int take = std::min(want - 1, n_vertices - covered);
        std::set<int> anchors;
        std::uniform_int_distribution<int> anchor_dist(0, covered - 1);
        while (static_cast<int>(anchors.size()) < want - take) anchors.insert(perm[anchor_dist(rng)]);
        Hyperedge e;
        e.vertices.assign(anchors.begin(), anchors.end());
        for (int i = 0; i < take; ++i) e.vertices.push_back(perm[covered + i]);
        covered += take;
        edges.push_back(std::move(e));
    }
    // overlay phase: uniformly random extra edges up to the requested count
    std::uniform_int_distribution<int> vertex_dist(0, n_vertices - 1);
    while (static_cast<int>(edges.size()) < n_edges) {
        const int want = size_dist(rng);
        std::set<int> picked;
        while (static_cast<int>(picked.size()) < want) picked.insert(vertex_dist(rng));
        Hyperedge e;
        e.vertices.assign(picked.begin(), picked.end());
        edges.push_back(std::move(e));
    }
    if (weighted) {
        std::uniform_real_distribution<double> weight_dist(0.0, 5.0);
        for (Hyperedge& e : edges) {
            double w = 0.0;
            while (!(w > 0.0)) w = weight_dist(rng);
            e.weight = w;
        }
    }
    return Hypergraph::from_indices(n_vertices, std::move(edges));
}

Hypergraph biogrid_like_hypergraph(std::uint64_t seed) {
    return random_connected_hypergraph(1808, 1431, 2, 6, seed);
}

}  // namespace hypersync
