// Timing comparison between the serial reference kernels and their OpenMP
// counterparts, plus the eigensolver at a few sizes. Build with
// hypersync-bench; results depend on the machine, nothing is asserted.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "hypersync/io.hpp"
#include "hypersync/kernels.hpp"
#include "hypersync/operators.hpp"
#include "hypersync/spectra.hpp"

using namespace hypersync;

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double time_ms(int reps, Fn&& fn) {
    const auto start = Clock::now();
    for (int r = 0; r < reps; ++r) fn();
    const auto stop = Clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

std::vector<double> random_vector(size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = dist(rng);
    return v;
}

void row(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s %10.3f ms %10.3f ms %8.2fx\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main() {
    std::mt19937_64 rng(42);

    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

    {
        const int n = 2048;
        const auto m = random_vector(static_cast<size_t>(n) * n, rng);
        const auto x = random_vector(n, rng);
        std::vector<double> y(n);
        row("matvec n=2048",
            time_ms(20, [&] { kernels::serial::matvec(m, n, x, y); }),
            time_ms(20, [&] { kernels::omp::matvec(m, n, x, y); }));
    }
    {
        const Hypergraph g = biogrid_like_hypergraph(7);
        const SymMatrix lw = build_Lw(g);
        const auto x = random_vector(g.n_vertices(), rng);
        std::vector<double> y(g.n_vertices());
        row("matvec biogrid n=1808",
            time_ms(20, [&] { kernels::serial::matvec(lw.data(), lw.n(), x, y); }),
            time_ms(20, [&] { kernels::omp::matvec(lw.data(), lw.n(), x, y); }));

        const kernels::EdgePlan plan = make_edge_plan(g);
        row("edge_apply biogrid",
            time_ms(200, [&] { kernels::serial::edge_apply(plan, x, 1, y); }),
            time_ms(200, [&] { kernels::omp::edge_apply(plan, x, 1, y); }));
    }
    {
        const auto x = random_vector(1 << 22, rng);
        const auto z = random_vector(1 << 22, rng);
        std::vector<double> y(1 << 22);
        row("axpby 4M",
            time_ms(10, [&] { kernels::serial::axpby(1.0, x, 0.5, z, y); }),
            time_ms(10, [&] { kernels::omp::axpby(1.0, x, 0.5, z, y); }));
        row("blocked_sum 4M",
            time_ms(10, [&] { (void)kernels::serial::blocked_sum(x); }),
            time_ms(10, [&] { (void)kernels::omp::blocked_sum(x); }));
    }
    {
        // eigensolver scaling (cyclic Jacobi is sequential by construction)
        for (int n : {64, 128, 256}) {
            const Hypergraph g = random_connected_hypergraph(n, 3 * n, 2, 5, 11, true);
            const SymMatrix lw = build_Lw(g);
            const double ms = time_ms(1, [&] { (void)eig_sym(lw); });
            std::printf("%-28s %10.3f ms\n", ("eig_sym n=" + std::to_string(n)).c_str(), ms);
        }
    }
    return 0;
}
