#include "hypersync/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hypersync/analysis.hpp"
#include "hypersync/dynamics.hpp"
#include "hypersync/io.hpp"
#include "hypersync/operators.hpp"
#include "hypersync/presets.hpp"
#include "hypersync/spectra.hpp"

namespace hypersync {

namespace {

SymMatrix build_operator(const Hypergraph& g, const std::string& op, int m) {
    if (op == "lw") return build_Lw(g);
    if (op == "c") return build_C(g);
    if (op == "bm") return build_Bm(g, m);
    if (op == "clique") return clique_laplacian(g);
    throw Error("unknown operator '" + op + "' (known: lw, c, bm, clique)");
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty())
        std::cout << text;
    else
        write_text_file(output_path, text);
}

int run_build_matrix(const std::string& input, const std::string& op, int m, const std::string& output) {
    const Hypergraph g = load_edge_list(input).hypergraph;
    emit(matrix_csv(build_operator(g, op, m)), output);
    return 0;
}

int run_spectrum(const std::string& input, const std::string& op, int m, bool eigenvectors,
                 const std::string& output) {
    const Hypergraph g = load_edge_list(input).hypergraph;
    const Spectrum s = eig_sym(build_operator(g, op, m));
    std::ostringstream os;
    for (int i = 0; i < s.n(); ++i) os << format_double(s.eigenvalues[i]) << "\n";
    if (eigenvectors) {
        os << "# eigenvectors (column i belongs to eigenvalue i)\n";
        for (int r = 0; r < s.n(); ++r) {
            for (int c = 0; c < s.n(); ++c) {
                if (c > 0) os << ",";
                os << format_double(s.vectors(r, c));
            }
            os << "\n";
        }
    }
    emit(os.str(), output);
    return 0;
}

int run_simulate(const std::string& input, const std::string& config_path, bool discrete, bool continuous,
                 const std::string& output) {
    if (discrete == continuous) throw CLI::ValidationError("pick exactly one of --discrete/--continuous");
    const ParseResult parsed = load_edge_list(input);
    const RunConfig cfg = RunConfig::load(config_path);
    const SymMatrix lw = build_Lw(parsed.hypergraph);
    const State x0 = random_state(parsed.hypergraph.n_vertices(), cfg.k, cfg.seed);

    const Trajectory traj =
        discrete ? simulate_discrete(x0, cfg.f(), cfg.g(), cfg.epsilon, lw, cfg.max_steps, cfg.conv_tol,
                                     cfg.div_tol, cfg.sample_every)
                 : simulate_continuous(x0, cfg.f(), cfg.g(), lw, cfg.dt, cfg.t_max, cfg.conv_tol,
                                       cfg.div_tol, cfg.sample_every);

    std::ostringstream os;
    os << "scenario=" << cfg.scenario << "\n";
    os << "dropped_singletons=" << parsed.dropped_singletons << "\n";
    os << "termination=" << termination_name(traj.termination) << "\n";
    os << "steps=" << traj.steps_taken << "\n";
    os << "final_sync_error=" << format_double(traj.final_sync_error) << "\n";
    std::cout << os.str();

    const std::string csv_path = !output.empty() ? output : cfg.output;
    if (!csv_path.empty()) export_trajectory_csv(traj, csv_path);
    return 0;
}

struct CheckArgs {
    std::string criterion;
    std::string input;
    double k_f = 0.0, k_g = 0.0;
    double epsilon = 1.0;
    std::optional<double> lw_norm;
    double sigma = 0.0;
    double b = 1.0;
    double jf = 0.0, jg = 0.0;
    std::string f_kind = "linear";
    double f_param = 0.0;
};

int run_check(const CheckArgs& args) {
    auto need_input = [&]() -> Hypergraph {
        if (args.input.empty()) throw CLI::ValidationError("--criterion " + args.criterion + " needs --input");
        return load_edge_list(args.input).hypergraph;
    };

    CriterionReport report;
    if (args.criterion == "global-discrete") {
        const double norm = args.lw_norm ? *args.lw_norm : operator_norm(build_Lw(need_input()));
        report = global_discrete(args.k_f, args.k_g, args.epsilon, norm);
    } else if (args.criterion == "global-discrete-feqg") {
        report = global_discrete_feqg(args.k_f, args.epsilon, build_Lw(need_input()));
    } else if (args.criterion == "global-discrete-delta") {
        report = global_discrete_delta(args.k_f, args.k_g, args.epsilon, build_Lw(need_input()));
    } else if (args.criterion == "eigenvalue-interval") {
        const Spectrum s = eig_sym(build_Lw(need_input()));
        report = eigenvalue_interval_check(args.sigma, args.epsilon, s);
    } else if (args.criterion == "coupling-interval") {
        const NonzeroExtremes ext = nonzero_extremes(eig_sym(build_Lw(need_input())));
        const Interval iv = coupling_interval(args.sigma, ext.lambda_min_abs, ext.lambda_max_abs);
        report.criterion = "coupling-interval";
        report.put("sigma", args.sigma);
        report.put("lambda_min_abs", ext.lambda_min_abs);
        report.put("lambda_max_abs", ext.lambda_max_abs);
        report.put("interval_lo", iv.lo);
        report.put("interval_hi", iv.hi);
        report.margin = iv.hi - iv.lo;
        report.verdict = iv.empty() ? Verdict::not_guaranteed : Verdict::guaranteed;
    } else if (args.criterion == "lyapunov-discrete") {
        Matrix jg(1, 1), jf(1, 1);
        jg(0, 0) = args.jg;
        jf(0, 0) = args.jf;
        const Spectrum s = eig_sym(build_Lw(need_input()));
        report = lyapunov_discrete_check(jg, jf, args.epsilon, s.eigenvalues, NormSpec::euclidean(1));
    } else if (args.criterion == "continuous-local") {
        Matrix jg(1, 1), jf(1, 1);
        jg(0, 0) = args.jg;
        jf(0, 0) = args.jf;
        const Spectrum s = eig_sym(build_Lw(need_input()));
        report = continuous_local_check({jf}, {jg}, s.eigenvalues, args.b, SymMatrix::identity(1));
    } else if (args.criterion == "continuous-global") {
        const MapSpec f = args.f_kind == "linear"    ? MapSpec::linear(args.f_param)
                          : args.f_kind == "sine"    ? MapSpec::sine(args.f_param)
                          : args.f_kind == "cosine"  ? MapSpec::cosine(args.f_param)
                          : args.f_kind == "expsin"  ? MapSpec::expsin(args.f_param)
                          : args.f_kind == "zero"    ? MapSpec::zero()
                                                     : MapSpec::identity();
        report = continuous_global_check(f, build_Lw(need_input()));
    } else {
        throw Error("unknown criterion '" + args.criterion +
                    "' (known: global-discrete, global-discrete-feqg, global-discrete-delta, "
                    "eigenvalue-interval, coupling-interval, lyapunov-discrete, continuous-local, "
                    "continuous-global)");
    }
    std::cout << report.to_key_value();
    return 0;
}

int run_bounds(const std::string& input, std::optional<double> sigma) {
    const Hypergraph g = load_edge_list(input).hypergraph;
    std::ostringstream os;
    const BoundReport diam = diameter_bound(g, eig_sym(build_C(g)));
    os << "diameter.bound=" << format_double(diam.bound) << "\n";
    os << "diameter.actual=" << format_double(diam.actual) << "\n";
    os << "diameter.holds=" << (diam.holds ? 1 : 0) << "\n";
    if (g.is_uniform()) {
        const BmReport bm = uniform_upper_bound_bm(g);
        os << "bm.value=" << format_double(bm.b_m) << "\n";
        os << "bm.lambda_max_abs=" << format_double(bm.lambda_max_abs) << "\n";
        os << "bm.holds=" << (bm.holds ? 1 : 0) << "\n";
        if (sigma) {
            const WindowReport window = structural_coupling_window(g, *sigma);
            os << "window.raw_lo=" << format_double(window.raw.lo) << "\n";
            os << "window.raw_hi=" << format_double(window.raw.hi) << "\n";
            os << "window.lo=" << format_double(window.effective.lo) << "\n";
            os << "window.hi=" << format_double(window.effective.hi) << "\n";
            os << "window.clamped=" << (window.clamped ? 1 : 0) << "\n";
            os << "window.empty=" << (window.effective.empty() ? 1 : 0) << "\n";
        }
    } else {
        os << "bm.skipped=not_uniform\n";
    }
    std::cout << os.str();
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
    CLI::App app{"hypergraph diffusion operators, spectra and synchronization checks"};
    app.require_subcommand(1);

    // build-matrix
    auto* build = app.add_subcommand("build-matrix", "assemble an operator and emit it as CSV");
    std::string bm_input, bm_op = "lw", bm_output;
    int bm_m = 2;
    build->add_option("--input", bm_input, "edge-list file")->required();
    build->add_option("--operator", bm_op, "lw|c|bm|clique");
    build->add_option("--m", bm_m, "edge size for --operator bm");
    build->add_option("--output", bm_output, "output path (stdout when omitted)");

    // spectrum
    auto* spec = app.add_subcommand("spectrum", "eigenvalues (and optionally eigenvectors) of an operator");
    std::string sp_input, sp_op = "lw", sp_output;
    int sp_m = 2;
    bool sp_vectors = false;
    spec->add_option("--input", sp_input, "edge-list file")->required();
    spec->add_option("--operator", sp_op, "lw|c|bm|clique");
    spec->add_option("--m", sp_m, "edge size for --operator bm");
    spec->add_flag("--eigenvectors", sp_vectors, "append the eigenvector matrix");
    spec->add_option("--output", sp_output, "output path (stdout when omitted)");

    // simulate
    auto* sim = app.add_subcommand("simulate", "run the coupled dynamics from a RunConfig");
    std::string sim_input, sim_config, sim_output;
    bool sim_discrete = false, sim_continuous = false;
    sim->add_option("--input", sim_input, "edge-list file")->required();
    sim->add_option("--config", sim_config, "key=value run config")->required();
    sim->add_flag("--discrete", sim_discrete, "discrete-time model");
    sim->add_flag("--continuous", sim_continuous, "continuous-time model (RK4)");
    sim->add_option("--output", sim_output, "trajectory CSV path (overrides config)");

    // check
    auto* check = app.add_subcommand("check", "evaluate a synchronization criterion");
    CheckArgs check_args;
    check->add_option("--criterion", check_args.criterion, "criterion id")->required();
    check->add_option("--input", check_args.input, "edge-list file");
    check->add_option("--kf", check_args.k_f, "Lipschitz constant of f");
    check->add_option("--kg", check_args.k_g, "Lipschitz constant of g");
    check->add_option("--epsilon", check_args.epsilon, "coupling strength");
    double check_norm = -1.0;
    check->add_option("--lw-norm", check_norm, "operator norm of L_w (computed from --input when omitted)");
    check->add_option("--sigma", check_args.sigma, "Cesaro exponent sigma");
    check->add_option("--b", check_args.b, "decay rate b");
    check->add_option("--jf", check_args.jf, "scalar Jacobian of f");
    check->add_option("--jg", check_args.jg, "scalar Jacobian of g");
    check->add_option("--f-kind", check_args.f_kind, "map kind for continuous-global");
    check->add_option("--f-param", check_args.f_param, "map parameter for continuous-global");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "structural spectral bounds");
    std::string bounds_input;
    double bounds_sigma = 0.0;
    bounds->add_option("--input", bounds_input, "edge-list file")->required();
    bounds->add_option("--sigma", bounds_sigma, "also evaluate the coupling window at this sigma");

    // preset
    auto* preset = app.add_subcommand("preset", "reproduce a worked scenario end to end");
    std::string preset_name, preset_outdir;
    preset->add_option("name", preset_name, "triangle-vs-clique|eight-vertex|lipschitz-sine|expsin")
        ->required();
    preset->add_option("--output-dir", preset_outdir, "directory for trajectory CSVs");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (build->parsed()) return run_build_matrix(bm_input, bm_op, bm_m, bm_output);
        if (spec->parsed()) return run_spectrum(sp_input, sp_op, sp_m, sp_vectors, sp_output);
        if (sim->parsed()) return run_simulate(sim_input, sim_config, sim_discrete, sim_continuous, sim_output);
        if (check->parsed()) {
            if (check->count("--lw-norm") > 0) check_args.lw_norm = check_norm;
            return run_check(check_args);
        }
        if (bounds->parsed())
            return run_bounds(bounds_input, bounds->count("--sigma") > 0
                                                ? std::optional<double>(bounds_sigma)
                                                : std::nullopt);
        if (preset->parsed()) {
            std::cout << run_preset(preset_name, preset_outdir);
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const EmptyFile& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const EmptyEdge& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const DuplicateVertexInEdge& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownVertexLabel& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const NonpositiveWeight& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const DuplicateLabel& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}

}  // namespace hypersync
