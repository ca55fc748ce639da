#pragma once

#include <vector>

#include "hypersync/kernels.hpp"
#include "hypersync/maps.hpp"
#include "hypersync/matrix.hpp"

namespace hypersync {

/// Per-vertex k-dimensional states, row-major n x k.
struct State {
    int n_vertices = 0;
    int k = 1;
    std::vector<double> x;
    double time = 0.0;
    long step = 0;

    static State from_values(std::vector<double> values, int n, int k = 1);
    std::span<const double> row(int u) const {
        return std::span<const double>(x).subspan(static_cast<size_t>(u) * k, k);
    }
    bool all_finite() const;
};

enum class Termination { converged, diverged, budget };
std::string termination_name(Termination t);

struct TrajectorySample {
    long step;
    double time;
    std::vector<double> x;
    double sync_error;
};

struct SimConfig {
    double epsilon = 1.0;
    double dt = 1e-2;
    long max_steps = 100000;
    double conv_tol = 1e-9;
    double div_tol = 1e12;
    long sample_every = 1;
};

struct Trajectory {
    SimConfig config;
    int n_vertices = 0;
    int k = 1;
    std::vector<TrajectorySample> samples;
    Termination termination = Termination::budget;
    long steps_taken = 0;
    double final_sync_error = 0.0;
};

/// max_u ||x(u) - mean||_2; zero exactly on the synchronization manifold.
double sync_error(const State& s);

/// One update x' = g(x) + eps * L_w f(x), maps applied vertexwise.
State step_discrete(const State& s, const MapSpec& f, const MapSpec& g, double eps, const SymMatrix& lw);

Trajectory simulate_discrete(const State& x0, const MapSpec& f, const MapSpec& g, double eps,
                             const SymMatrix& lw, long max_steps = 100000, double conv_tol = 1e-9,
                             double div_tol = 1e12, long sample_every = 1);

/// Matrix-free variants: the coupling term is applied through the edge plan
/// instead of the assembled operator (same L_w action, O(sum |e|) per step).
State step_discrete(const State& s, const MapSpec& f, const MapSpec& g, double eps,
                    const kernels::EdgePlan& plan);

Trajectory simulate_discrete(const State& x0, const MapSpec& f, const MapSpec& g, double eps,
                             const kernels::EdgePlan& plan, long max_steps = 100000, double conv_tol = 1e-9,
                             double div_tol = 1e12, long sample_every = 1);

/// One classical RK4 step of dx/dt = f(x) + L_w g(x).
State step_continuous_rk4(const State& s, const MapSpec& f, const MapSpec& g, const SymMatrix& lw, double dt);

Trajectory simulate_continuous(const State& x0, const MapSpec& f, const MapSpec& g, const SymMatrix& lw,
                               double dt = 1e-2, double t_max = 10.0, double conv_tol = 1e-9,
                               double div_tol = 1e12, long sample_every = 1);

/// On-manifold scalar orbit s_{n+1} = g(s_n); returns s_0..s_{n_steps}.
std::vector<std::vector<double>> synced_orbit(const std::vector<double>& s0, const MapSpec& g, long n_steps);

/// Linearized perturbation recursion eta(n+1)(i) = eta(n)(i) (J_g(n) + eps
/// lambda_i J_f(n)) per eigen-mode i. eta matrices are N x k, one row per
/// mode; returns eta(0)..eta(n_steps).
std::vector<Matrix> variational_discrete(const Matrix& eta1, const std::vector<double>& eigenvalues,
                                         const std::vector<Matrix>& jf_seq, const std::vector<Matrix>& jg_seq,
                                         double eps, long n_steps);

}  // namespace hypersync
