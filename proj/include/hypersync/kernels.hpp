#pragma once

#include <span>
#include <vector>

namespace hypersync::kernels {

// Hot inner loops, each in a serial reference version and an OpenMP version.
// The parallel versions are bit-identical to the serial ones: rows (or fixed
// blocks) are independent units of work, and each unit accumulates in the
// same order as the reference. Reductions use a fixed block size so the
// summation tree does not depend on the thread count.

inline constexpr int kReductionBlock = 4096;

// Problems below this many row-ops run serially even when OpenMP is enabled.
inline constexpr long kParallelCutoff = 1 << 15;

/// Enable/disable the OpenMP dispatch globally (tests and benchmarks pin it).
void set_parallel(bool enabled);
bool parallel_enabled();

/// Matrix-free action of the weighted diffusion operator, prebuilt from a
/// hypergraph: per-edge vertex lists plus a per-vertex incidence index.
struct EdgePlan {
    int n_vertices = 0;
    // CSR edge -> vertices
    std::vector<int> edge_offsets;  // size n_edges+1
    std::vector<int> edge_vertices;
    std::vector<double> edge_coeff;  // w(e)/(|e|-1)
    // CSR vertex -> incident edge ids
    std::vector<int> vert_offsets;  // size n_vertices+1
    std::vector<int> vert_edges;

    int n_edges() const { return static_cast<int>(edge_offsets.size()) - 1; }
};

namespace serial {

/// y = M x, M dense row-major n x n.
void matvec(std::span<const double> m, int n, std::span<const double> x, std::span<double> y);

/// Y = M X, X row-major n x k.
void matvec_block(std::span<const double> m, int n, std::span<const double> x, int k, std::span<double> y);

/// y = a*x + b*z elementwise.
void axpby(double a, std::span<const double> x, double b, std::span<const double> z, std::span<double> y);

/// (L_w x)(u) via the edge plan; x and y are n x k row-major.
void edge_apply(const EdgePlan& plan, std::span<const double> x, int k, std::span<double> y);

/// Sum with a fixed-block tree so the result is independent of threading.
double blocked_sum(std::span<const double> terms);

double max_abs(std::span<const double> x);

}  // namespace serial

namespace omp {

void matvec(std::span<const double> m, int n, std::span<const double> x, std::span<double> y);
void matvec_block(std::span<const double> m, int n, std::span<const double> x, int k, std::span<double> y);
void axpby(double a, std::span<const double> x, double b, std::span<const double> z, std::span<double> y);
void edge_apply(const EdgePlan& plan, std::span<const double> x, int k, std::span<double> y);
double blocked_sum(std::span<const double> terms);
double max_abs(std::span<const double> x);

}  // namespace omp

// Dispatching fronts: OpenMP when enabled and the problem is large enough.
void matvec(std::span<const double> m, int n, std::span<const double> x, std::span<double> y);
void matvec_block(std::span<const double> m, int n, std::span<const double> x, int k, std::span<double> y);
void axpby(double a, std::span<const double> x, double b, std::span<const double> z, std::span<double> y);
void edge_apply(const EdgePlan& plan, std::span<const double> x, int k, std::span<double> y);
double blocked_sum(std::span<const double> terms);
double max_abs(std::span<const double> x);

}  // namespace hypersync::kernels
