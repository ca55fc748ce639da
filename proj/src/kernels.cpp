#include "hypersync/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hypersync::kernels {

namespace {
std::atomic<bool> g_parallel{true};
}

void set_parallel(bool enabled) { g_parallel.store(enabled); }

bool parallel_enabled() {
#ifdef _OPENMP
    return g_parallel.load();
#else
    return false;
#endif
}

namespace serial {

void matvec(std::span<const double> m, int n, std::span<const double> x, std::span<double> y) {
    for (int i = 0; i < n; ++i) {
        const double* row = m.data() + static_cast<size_t>(i) * n;
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
}

void matvec_block(std::span<const double> m, int n, std::span<const double> x, int k, std::span<double> y) {
    for (int i = 0; i < n; ++i) {
        const double* row = m.data() + static_cast<size_t>(i) * n;
        double* out = y.data() + static_cast<size_t>(i) * k;
        for (int c = 0; c < k; ++c) out[c] = 0.0;
        for (int j = 0; j < n; ++j) {
            const double mij = row[j];
            if (mij == 0.0) continue;
            const double* xr = x.data() + static_cast<size_t>(j) * k;
            for (int c = 0; c < k; ++c) out[c] += mij * xr[c];
        }
    }
}

void axpby(double a, std::span<const double> x, double b, std::span<const double> z, std::span<double> y) {
    const size_t n = x.size();
    for (size_t i = 0; i < n; ++i) y[i] = a * x[i] + b * z[i];
}

void edge_apply(const EdgePlan& plan, std::span<const double> x, int k, std::span<double> y) {
    const int ne = plan.n_edges();
    // per-edge column sums S_e = sum_{v in e} x(v)
    std::vector<double> sums(static_cast<size_t>(ne) * k);
    for (int e = 0; e < ne; ++e) {
        double* s = sums.data() + static_cast<size_t>(e) * k;
        for (int c = 0; c < k; ++c) s[c] = 0.0;
        for (int p = plan.edge_offsets[e]; p < plan.edge_offsets[e + 1]; ++p) {
            const double* xr = x.data() + static_cast<size_t>(plan.edge_vertices[p]) * k;
            for (int c = 0; c < k; ++c) s[c] += xr[c];
        }
    }
    for (int u = 0; u < plan.n_vertices; ++u) {
        double* out = y.data() + static_cast<size_t>(u) * k;
        const double* xu = x.data() + static_cast<size_t>(u) * k;
        for (int c = 0; c < k; ++c) out[c] = 0.0;
        for (int p = plan.vert_offsets[u]; p < plan.vert_offsets[u + 1]; ++p) {
            const int e = plan.vert_edges[p];
            const double coeff = plan.edge_coeff[e];
            const double sz = static_cast<double>(plan.edge_offsets[e + 1] - plan.edge_offsets[e]);
            const double* s = sums.data() + static_cast<size_t>(e) * k;
            for (int c = 0; c < k; ++c) out[c] += coeff * (s[c] - sz * xu[c]);
        }
    }
}

double blocked_sum(std::span<const double> terms) {
    const size_t n = terms.size();
    const size_t nblocks = (n + kReductionBlock - 1) / kReductionBlock;
    if (nblocks <= 1) {
        double acc = 0.0;
        for (double v : terms) acc += v;
        return acc;
    }
    std::vector<double> partial(nblocks, 0.0);
    for (size_t b = 0; b < nblocks; ++b) {
        const size_t lo = b * kReductionBlock;
        const size_t hi = std::min(n, lo + kReductionBlock);
        double acc = 0.0;
        for (size_t i = lo; i < hi; ++i) acc += terms[i];
        partial[b] = acc;
    }
    double acc = 0.0;
    for (double v : partial) acc += v;
    return acc;
}

double max_abs(std::span<const double> x) {
    double best = 0.0;
    for (double v : x) best = std::max(best, std::abs(v));
    return best;
}

}  // namespace serial

namespace omp {

#ifdef _OPENMP

void matvec(std::span<const double> m, int n, std::span<const double> x, std::span<double> y) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        const double* row = m.data() + static_cast<size_t>(i) * n;
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
}

void matvec_block(std::span<const double> m, int n, std::span<const double> x, int k, std::span<double> y) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        const double* row = m.data() + static_cast<size_t>(i) * n;
        double* out = y.data() + static_cast<size_t>(i) * k;
        for (int c = 0; c < k; ++c) out[c] = 0.0;
        for (int j = 0; j < n; ++j) {
            const double mij = row[j];
            if (mij == 0.0) continue;
            const double* xr = x.data() + static_cast<size_t>(j) * k;
            for (int c = 0; c < k; ++c) out[c] += mij * xr[c];
        }
    }
}

void axpby(double a, std::span<const double> x, double b, std::span<const double> z, std::span<double> y) {
    const long n = static_cast<long>(x.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) y[i] = a * x[i] + b * z[i];
}

void edge_apply(const EdgePlan& plan, std::span<const double> x, int k, std::span<double> y) {
    const int ne = plan.n_edges();
    std::vector<double> sums(static_cast<size_t>(ne) * k);
#pragma omp parallel for schedule(static)
    for (int e = 0; e < ne; ++e) {
        double* s = sums.data() + static_cast<size_t>(e) * k;
        for (int c = 0; c < k; ++c) s[c] = 0.0;
        for (int p = plan.edge_offsets[e]; p < plan.edge_offsets[e + 1]; ++p) {
            const double* xr = x.data() + static_cast<size_t>(plan.edge_vertices[p]) * k;
            for (int c = 0; c < k; ++c) s[c] += xr[c];
        }
    }
#pragma omp parallel for schedule(static)
    for (int u = 0; u < plan.n_vertices; ++u) {
        double* out = y.data() + static_cast<size_t>(u) * k;
        const double* xu = x.data() + static_cast<size_t>(u) * k;
        for (int c = 0; c < k; ++c) out[c] = 0.0;
        for (int p = plan.vert_offsets[u]; p < plan.vert_offsets[u + 1]; ++p) {
            const int e = plan.vert_edges[p];
            const double coeff = plan.edge_coeff[e];
            const double sz = static_cast<double>(plan.edge_offsets[e + 1] - plan.edge_offsets[e]);
            const double* s = sums.data() + static_cast<size_t>(e) * k;
            for (int c = 0; c < k; ++c) out[c] += coeff * (s[c] - sz * xu[c]);
        }
    }
}

double blocked_sum(std::span<const double> terms) {
    const size_t n = terms.size();
    const long nblocks = static_cast<long>((n + kReductionBlock - 1) / kReductionBlock);
    if (nblocks <= 1) return serial::blocked_sum(terms);
    std::vector<double> partial(nblocks, 0.0);
#pragma omp parallel for schedule(static)
    for (long b = 0; b < nblocks; ++b) {
        const size_t lo = static_cast<size_t>(b) * kReductionBlock;
        const size_t hi = std::min(n, lo + kReductionBlock);
        double acc = 0.0;
        for (size_t i = lo; i < hi; ++i) acc += terms[i];
        partial[b] = acc;
    }
    double acc = 0.0;
    for (double v : partial) acc += v;
    return acc;
}

double max_abs(std::span<const double> x) {
    const long n = static_cast<long>(x.size());
    double best = 0.0;
#pragma omp parallel for schedule(static) reduction(max : best)
    for (long i = 0; i < n; ++i) best = std::max(best, std::abs(x[i]));
    return best;
}

#else

void matvec(std::span<const double> m, int n, std::span<const double> x, std::span<double> y) {
    serial::matvec(m, n, x, y);
}
void matvec_block(std::span<const double> m, int n, std::span<const double> x, int k, std::span<double> y) {
    serial::matvec_block(m, n, x, k, y);
}
void axpby(double a, std::span<const double> x, double b, std::span<const double> z, std::span<double> y) {
    serial::axpby(a, x, b, z, y);
}
void edge_apply(const EdgePlan& plan, std::span<const double> x, int k, std::span<double> y) {
    serial::edge_apply(plan, x, k, y);
}
double blocked_sum(std::span<const double> terms) { return serial::blocked_sum(terms); }
double max_abs(std::span<const double> x) { return serial::max_abs(x); }

#endif

}  // namespace omp

namespace {
inline bool go_parallel(long work) { return parallel_enabled() && work >= kParallelCutoff; }
}

void matvec(std::span<const double> m, int n, std::span<const double> x, std::span<double> y) {
    if (go_parallel(static_cast<long>(n) * n))
        omp::matvec(m, n, x, y);
    else
        serial::matvec(m, n, x, y);
}

void matvec_block(std::span<const double> m, int n, std::span<const double> x, int k, std::span<double> y) {
    if (go_parallel(static_cast<long>(n) * n * k))
        omp::matvec_block(m, n, x, k, y);
    else
        serial::matvec_block(m, n, x, k, y);
}

void axpby(double a, std::span<const double> x, double b, std::span<const double> z, std::span<double> y) {
    if (go_parallel(static_cast<long>(x.size())))
        omp::axpby(a, x, b, z, y);
    else
        serial::axpby(a, x, b, z, y);
}

void edge_apply(const EdgePlan& plan, std::span<const double> x, int k, std::span<double> y) {
    if (go_parallel(static_cast<long>(plan.edge_vertices.size()) * k))
        omp::edge_apply(plan, x, k, y);
    else
        serial::edge_apply(plan, x, k, y);
}

double blocked_sum(std::span<const double> terms) {
    if (go_parallel(static_cast<long>(terms.size())))
        return omp::blocked_sum(terms);
    return serial::blocked_sum(terms);
}

double max_abs(std::span<const double> x) {
    if (go_parallel(static_cast<long>(x.size())))
        return omp::max_abs(x);
    return serial::max_abs(x);
}

}  // namespace hypersync::kernels
