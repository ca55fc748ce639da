#include "hypersync/dynamics.hpp"

#include <cmath>

#include "hypersync/kernels.hpp"

namespace hypersync {

State State::from_values(std::vector<double> values, int n, int k) {
    if (n < 1 || k < 1 || static_cast<int>(values.size()) != n * k)
        throw DimensionMismatch("state needs n*k values");
    State s;
    s.n_vertices = n;
    s.k = k;
    s.x = std::move(values);
    return s;
}

bool State::all_finite() const {
    for (double v : x)
        if (!std::isfinite(v)) return false;
    return true;
}

std::string termination_name(Termination t) {
    switch (t) {
        case Termination::converged: return "converged";
        case Termination::diverged: return "diverged";
        case Termination::budget: return "budget";
    }
    return "unknown";
}

double sync_error(const State& s) {
    const int n = s.n_vertices;
    const int k = s.k;
    std::vector<double> mean(k, 0.0);
    for (int u = 0; u < n; ++u)
        for (int c = 0; c < k; ++c) mean[c] += s.x[static_cast<size_t>(u) * k + c];
    for (int c = 0; c < k; ++c) mean[c] /= n;

    double worst = 0.0;
    for (int u = 0; u < n; ++u) {
        double acc = 0.0;
        for (int c = 0; c < k; ++c) {
            const double d = s.x[static_cast<size_t>(u) * k + c] - mean[c];
            acc += d * d;
        }
        worst = std::max(worst, acc);
    }
    return std::sqrt(worst);
}

namespace {

template <typename CouplingFn>
State step_discrete_impl(const State& s, const MapSpec& f, const MapSpec& g, double eps,
                         CouplingFn&& coupling) {
    const std::vector<double> fx = f.apply_state(s.x, s.n_vertices, s.k);
    const std::vector<double> coupled = coupling(fx);
    const std::vector<double> gx = g.apply_state(s.x, s.n_vertices, s.k);

    State out;
    out.n_vertices = s.n_vertices;
    out.k = s.k;
    out.x.resize(s.x.size());
    kernels::axpby(1.0, gx, eps, coupled, out.x);
    out.time = s.time + 1.0;
    out.step = s.step + 1;
    if (!out.all_finite()) throw NonFinite("non-finite entry after discrete step");
    return out;
}

}  // namespace

State step_discrete(const State& s, const MapSpec& f, const MapSpec& g, double eps, const SymMatrix& lw) {
    if (lw.n() != s.n_vertices) throw DimensionMismatch("operator dimension mismatch");
    return step_discrete_impl(s, f, g, eps,
                              [&](const std::vector<double>& fx) { return lw.apply_block(fx, s.k); });
}

State step_discrete(const State& s, const MapSpec& f, const MapSpec& g, double eps,
                    const kernels::EdgePlan& plan) {
    if (plan.n_vertices != s.n_vertices) throw DimensionMismatch("edge plan dimension mismatch");
    return step_discrete_impl(s, f, g, eps, [&](const std::vector<double>& fx) {
        std::vector<double> coupled(fx.size());
        kernels::edge_apply(plan, fx, s.k, coupled);
        return coupled;
    });
}

namespace {

// dx/dt = f(x) + L_w g(x)
std::vector<double> continuous_rhs(const State& shape, std::span<const double> x, const MapSpec& f,
                                   const MapSpec& g, const SymMatrix& lw) {
    const std::vector<double> fx = f.apply_state(x, shape.n_vertices, shape.k);
    const std::vector<double> gx = g.apply_state(x, shape.n_vertices, shape.k);
    const std::vector<double> coupled = lw.apply_block(gx, shape.k);
    std::vector<double> out(x.size());
    kernels::axpby(1.0, fx, 1.0, coupled, out);
    return out;
}

}  // namespace

State step_continuous_rk4(const State& s, const MapSpec& f, const MapSpec& g, const SymMatrix& lw, double dt) {
    if (!(dt > 0)) throw Error("dt must be positive");
    if (lw.n() != s.n_vertices) throw DimensionMismatch("operator dimension mismatch");
    const size_t len = s.x.size();

    const std::vector<double> k1 = continuous_rhs(s, s.x, f, g, lw);
    std::vector<double> stage(len);
    kernels::axpby(1.0, s.x, 0.5 * dt, k1, stage);
    const std::vector<double> k2 = continuous_rhs(s, stage, f, g, lw);
    kernels::axpby(1.0, s.x, 0.5 * dt, k2, stage);
    const std::vector<double> k3 = continuous_rhs(s, stage, f, g, lw);
    kernels::axpby(1.0, s.x, dt, k3, stage);
    const std::vector<double> k4 = continuous_rhs(s, stage, f, g, lw);

    State out;
    out.n_vertices = s.n_vertices;
    out.k = s.k;
    out.x.resize(len);
    for (size_t i = 0; i < len; ++i)
        out.x[i] = s.x[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    out.time = s.time + dt;
    out.step = s.step + 1;
    if (!out.all_finite()) throw NonFinite("non-finite entry after RK4 step");
    return out;
}

namespace {

template <typename StepFn>
Trajectory run_simulation(const State& x0, long max_steps, double conv_tol, double div_tol, long sample_every,
                          const SimConfig& config, StepFn&& advance) {
    if (max_steps < 1) throw Error("max_steps must be at least 1");
    if (sample_every < 1) sample_every = 1;

    Trajectory traj;
    traj.config = config;
    traj.n_vertices = x0.n_vertices;
    traj.k = x0.k;

    State current = x0;
    current.step = 0;
    double err = sync_error(current);
    traj.samples.push_back({current.step, current.time, current.x, err});
    if (err <= conv_tol) {
        traj.termination = Termination::converged;
        traj.final_sync_error = err;
        return traj;
    }

    for (long n = 1; n <= max_steps; ++n) {
        bool blew_up = false;
        try {
            current = advance(current);
        } catch (const NonFinite&) {
            blew_up = true;
        }
        if (blew_up || kernels::max_abs(current.x) >= div_tol) {
            if (!blew_up) {
                err = sync_error(current);
                traj.samples.push_back({current.step, current.time, current.x, err});
            }
            traj.termination = Termination::diverged;
            traj.steps_taken = n;
            traj.final_sync_error = err;
            return traj;
        }
        err = sync_error(current);
        const bool done = err <= conv_tol || n == max_steps;
        if (done || n % sample_every == 0)
            traj.samples.push_back({current.step, current.time, current.x, err});
        if (err <= conv_tol) {
            traj.termination = Termination::converged;
            traj.steps_taken = n;
            traj.final_sync_error = err;
            return traj;
        }
    }
    traj.termination = Termination::budget;
    traj.steps_taken = max_steps;
    traj.final_sync_error = err;
    return traj;
}

}  // namespace

Trajectory simulate_discrete(const State& x0, const MapSpec& f, const MapSpec& g, double eps,
                             const SymMatrix& lw, long max_steps, double conv_tol, double div_tol,
                             long sample_every) {
    SimConfig config;
    config.epsilon = eps;
    config.max_steps = max_steps;
    config.conv_tol = conv_tol;
    config.div_tol = div_tol;
    config.sample_every = sample_every;
    return run_simulation(x0, max_steps, conv_tol, div_tol, sample_every, config,
                          [&](const State& s) { return step_discrete(s, f, g, eps, lw); });
}

Trajectory simulate_discrete(const State& x0, const MapSpec& f, const MapSpec& g, double eps,
                             const kernels::EdgePlan& plan, long max_steps, double conv_tol, double div_tol,
                             long sample_every) {
    SimConfig config;
    config.epsilon = eps;
    config.max_steps = max_steps;
    config.conv_tol = conv_tol;
    config.div_tol = div_tol;
    config.sample_every = sample_every;
    return run_simulation(x0, max_steps, conv_tol, div_tol, sample_every, config,
                          [&](const State& s) { return step_discrete(s, f, g, eps, plan); });
}

Trajectory simulate_continuous(const State& x0, const MapSpec& f, const MapSpec& g, const SymMatrix& lw,
                               double dt, double t_max, double conv_tol, double div_tol, long sample_every) {
    if (!(dt > 0) || !(t_max > 0)) throw Error("dt and t_max must be positive");
    const long max_steps = std::max<long>(1, std::lround(t_max / dt));
    SimConfig config;
    config.dt = dt;
    config.max_steps = max_steps;
    config.conv_tol = conv_tol;
    config.div_tol = div_tol;
    config.sample_every = sample_every;
    return run_simulation(x0, max_steps, conv_tol, div_tol, sample_every, config,
                          [&](const State& s) { return step_continuous_rk4(s, f, g, lw, dt); });
}

std::vector<std::vector<double>> synced_orbit(const std::vector<double>& s0, const MapSpec& g, long n_steps) {
    std::vector<std::vector<double>> orbit;
    orbit.reserve(n_steps + 1);
    orbit.push_back(s0);
    std::vector<double> current = s0;
    std::vector<double> next(s0.size());
    for (long n = 0; n < n_steps; ++n) {
        g.apply_row(current, next);
        for (double v : next)
            if (!std::isfinite(v)) throw NonFinite("synced orbit escaped");
        current = next;
        orbit.push_back(current);
    }
    return orbit;
}

std::vector<Matrix> variational_discrete(const Matrix& eta1, const std::vector<double>& eigenvalues,
                                         const std::vector<Matrix>& jf_seq, const std::vector<Matrix>& jg_seq,
                                         double eps, long n_steps) {
    const int n_modes = eta1.rows();
    const int k = eta1.cols();
    if (static_cast<int>(eigenvalues.size()) != n_modes)
        throw DimensionMismatch("one row of eta(1) per eigenvalue");
    if (static_cast<long>(jf_seq.size()) < n_steps || static_cast<long>(jg_seq.size()) < n_steps)
        throw DimensionMismatch("Jacobian sequences shorter than n_steps");
    for (const auto& j : jf_seq)
        if (j.rows() != k || j.cols() != k) throw DimensionMismatch("J_f must be k x k");
    for (const auto& j : jg_seq)
        if (j.rows() != k || j.cols() != k) throw DimensionMismatch("J_g must be k x k");

    std::vector<Matrix> etas;
    etas.reserve(n_steps + 1);
    etas.push_back(eta1);
    Matrix current = eta1;
    for (long n = 0; n < n_steps; ++n) {
        Matrix next(n_modes, k);
        for (int i = 0; i < n_modes; ++i) {
            // row times (J_g + eps lambda_i J_f)
            for (int c = 0; c < k; ++c) {
                double acc = 0.0;
                for (int r = 0; r < k; ++r)
                    acc += current(i, r) * (jg_seq[n](r, c) + eps * eigenvalues[i] * jf_seq[n](r, c));
                next(i, c) = acc;
            }
        }
        current = next;
        etas.push_back(current);
    }
    return etas;
}

}  // namespace hypersync
