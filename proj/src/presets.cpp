#include "hypersync/presets.hpp"

#include <cmath>
#include <sstream>

#include "hypersync/analysis.hpp"
#include "hypersync/dynamics.hpp"
#include "hypersync/io.hpp"
#include "hypersync/operators.hpp"
#include "hypersync/spectra.hpp"

namespace hypersync {

namespace {

constexpr std::uint64_t kPresetSeed = 0x5e1ec7ed;

void emit_spectrum(std::ostringstream& os, const std::string& prefix, const SymMatrix& m) {
    const Spectrum s = eig_sym(m);
    for (int i = 0; i < s.n(); ++i)
        os << prefix << ".eig." << i << "=" << format_double(s.eigenvalues[i]) << "\n";
}

void emit_run(std::ostringstream& os, const std::string& name, const Trajectory& traj,
              const std::string& output_dir) {
    os << name << ".termination=" << termination_name(traj.termination) << "\n";
    os << name << ".steps=" << traj.steps_taken << "\n";
    os << name << ".final_sync_error=" << format_double(traj.final_sync_error) << "\n";
    if (!output_dir.empty()) export_trajectory_csv(traj, output_dir + "/" + name + ".csv");
}

void emit_report(std::ostringstream& os, const std::string& name, const CriterionReport& report) {
    os << name << ".value=" << format_double(report.get("value")) << "\n";
    os << name << ".verdict=" << verdict_name(report.verdict) << "\n";
}

std::string preset_triangle_vs_clique(const std::string& output_dir) {
    const Hypergraph g = triangle_hypergraph();
    const SymMatrix lw = build_Lw(g);
    const SymMatrix l = clique_laplacian(g);

    std::ostringstream os;
    os << "preset=triangle-vs-clique\n";
    emit_spectrum(os, "I_plus_Lw", lw.plus_scaled_identity(1.0));
    emit_spectrum(os, "I_plus_L", l.plus_scaled_identity(1.0));

    const State x0 = random_state(3, 1, kPresetSeed);
    const MapSpec id = MapSpec::identity();
    emit_run(os, "disH", simulate_discrete(x0, id, id, 1.0, lw, 200), output_dir);
    emit_run(os, "disL", simulate_discrete(x0, id, id, 1.0, l, 200), output_dir);
    return os.str();
}

std::string preset_eight_vertex(const std::string& output_dir) {
    const Hypergraph g = eight_vertex_hypergraph();
    const SymMatrix lw = build_Lw(g);
    const SymMatrix l = clique_laplacian(g);

    std::ostringstream os;
    os << "preset=eight-vertex\n";
    emit_spectrum(os, "I_plus_34_Lw", lw.scaled(0.75).plus_scaled_identity(1.0));
    emit_spectrum(os, "I_plus_34_L", l.scaled(0.75).plus_scaled_identity(1.0));

    const State x0 = random_state(8, 1, kPresetSeed + 1);
    const MapSpec id = MapSpec::identity();
    emit_run(os, "disC2", simulate_discrete(x0, id, id, 0.75, lw, 10000), output_dir);
    emit_run(os, "disL2", simulate_discrete(x0, id, id, 0.75, l, 10000), output_dir);
    return os.str();
}

std::string preset_lipschitz_sine(const std::string& output_dir) {
    const double reported_norm = 87.6182;
    const double eps = 1.0 / 88.0;
    const Hypergraph g = scaled_synthetic_hypergraph(reported_norm, kPresetSeed + 2);
    const SymMatrix lw = build_Lw(g);
    const double lw_norm = operator_norm(lw);

    std::ostringstream os;
    os << "preset=lipschitz-sine\n";
    os << "n_vertices=" << g.n_vertices() << "\n";
    os << "lw_norm=" << format_double(lw_norm) << "\n";
    os << "epsilon=" << format_double(eps) << "\n";

    emit_report(os, "p04_q05", global_discrete(0.5, 0.4, eps, reported_norm));
    emit_report(os, "p1_q153", global_discrete(1.53, 1.0, eps, reported_norm));
    emit_report(os, "p1_q152", global_discrete(1.52, 1.0, eps, reported_norm));

    const State x0 = random_state(g.n_vertices(), 1, kPresetSeed + 3);
    emit_run(os, "sync_p04_q05",
             simulate_discrete(x0, MapSpec::sine(0.5), MapSpec::cosine(0.4), eps, lw, 100000), output_dir);
    return os.str();
}

std::string preset_expsin(const std::string& output_dir) {
    const double eps = 1.0 / 88.0;
    const Hypergraph g = scaled_synthetic_hypergraph(87.6182, kPresetSeed + 2);
    const SymMatrix lw = build_Lw(g);

    std::ostringstream os;
    os << "preset=expsin\n";
    os << "n_vertices=" << g.n_vertices() << "\n";
    os << "epsilon=" << format_double(eps) << "\n";
    const double iteration_norm = operator_norm(lw.scaled(eps).plus_scaled_identity(1.0));
    os << "iteration_norm=" << format_double(iteration_norm) << "\n";

    struct Case {
        const char* name;
        double q;
        double k_f;
    };
    const double crude = std::exp(1.0);
    const double sharp = MapSpec::expsin_slope_factor();
    const Case cases[] = {
        {"q28_crude", 1.0 / 2.8, crude / 2.8},
        {"q147_sharp", 1.0 / 1.47, sharp / 1.47},
        {"q115_sharp", 1.0 / 1.15, sharp / 1.15},
    };
    for (const Case& c : cases) {
        const CriterionReport report = global_discrete_feqg(c.k_f, eps, lw);
        os << c.name << ".k_f=" << format_double(c.k_f) << "\n";
        os << c.name << ".verdict=" << verdict_name(report.verdict) << "\n";
    }

    const State x0 = random_state(g.n_vertices(), 1, kPresetSeed + 4);
    const MapSpec f = MapSpec::expsin(1.0 / 2.8);
    emit_run(os, "sync_q28", simulate_discrete(x0, f, f, eps, lw, 100000), output_dir);
    return os.str();
}

}  // namespace

Hypergraph triangle_hypergraph() {
    return Hypergraph::from_indices(3, {Hyperedge{{0, 1, 2}, 1.0}});
}

Hypergraph eight_vertex_hypergraph() {
    return Hypergraph::from_indices(
        8, {Hyperedge{{0, 1, 2, 3}, 1.0}, Hyperedge{{1, 4, 5}, 1.0}, Hyperedge{{2, 6, 7}, 1.0}});
}

Hypergraph scaled_synthetic_hypergraph(double target_norm, std::uint64_t seed, int n_vertices, int n_edges) {
    Hypergraph base = random_connected_hypergraph(n_vertices, n_edges, 2, 6, seed);
    const double norm = operator_norm(build_Lw(base));
    const double scale = target_norm / norm;
    std::vector<Hyperedge> edges = base.edges();
    for (Hyperedge& e : edges) e.weight *= scale;
    return Hypergraph::from_indices(n_vertices, std::move(edges));
}

std::string run_preset(const std::string& name, const std::string& output_dir) {
    if (name == "triangle-vs-clique") return preset_triangle_vs_clique(output_dir);
    if (name == "eight-vertex") return preset_eight_vertex(output_dir);
    if (name == "lipschitz-sine") return preset_lipschitz_sine(output_dir);
    if (name == "expsin") return preset_expsin(output_dir);
    throw Error("unknown preset '" + name +
                "' (known: triangle-vs-clique, eight-vertex, lipschitz-sine, expsin)");
}

}  // namespace hypersync
