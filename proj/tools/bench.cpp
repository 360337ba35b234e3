// Benchmark comparing the serial reference path of the experiment kernels
// against the OpenMP path, verifying that both produce identical results.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"

#include "pscf/harness.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace pscf;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP benchmark for the experiment kernels"};
    int trials = 500;
    int n = 5, m = 5;
    int scan_n = 3, scan_m = 3;
    std::uint64_t seed = 7;
    app.add_option("--trials", trials, "table2 trials for the benchmark cell");
    app.add_option("--n", n, "table2 cell agents");
    app.add_option("--m", m, "table2 cell alternatives");
    app.add_option("--scan-n", scan_n, "exhaustive scan agents");
    app.add_option("--scan-m", scan_m, "exhaustive scan alternatives");
    app.add_option("--seed", seed, "RNG seed");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both paths run serially\n");
#endif

    ExperimentSpec spec;
    spec.sizes = {{n, m}};
    spec.trials = trials;
    spec.seed = seed;

    auto t0 = std::chrono::steady_clock::now();
    const auto serial_cells = run_table2(spec, Exec::serial);
    const double table2_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto parallel_cells = run_table2(spec, Exec::parallel);
    const double table2_parallel = seconds_since(t0);

    if (serial_cells[0].sd_efficient_count != parallel_cells[0].sd_efficient_count) {
        std::fprintf(stderr, "MISMATCH: table2 serial=%d parallel=%d\n",
                     serial_cells[0].sd_efficient_count, parallel_cells[0].sd_efficient_count);
        return 1;
    }

    t0 = std::chrono::steady_clock::now();
    const std::uint64_t scan_serial = exhaustive_rmec_efficiency(scan_n, scan_m, Exec::serial);
    const double exhaustive_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const std::uint64_t scan_parallel = exhaustive_rmec_efficiency(scan_n, scan_m, Exec::parallel);
    const double exhaustive_parallel = seconds_since(t0);

    if (scan_serial != scan_parallel) {
        std::fprintf(stderr, "MISMATCH: exhaustive serial=%llu parallel=%llu\n",
                     static_cast<unsigned long long>(scan_serial),
                     static_cast<unsigned long long>(scan_parallel));
        return 1;
    }

    std::printf("%-28s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");
    std::printf("%-28s %9.3fs %9.3fs %7.2fx\n",
                ("table2 " + std::to_string(n) + "x" + std::to_string(m) + " x" +
                 std::to_string(trials))
                    .c_str(),
                table2_serial, table2_parallel, table2_serial / table2_parallel);
    std::printf("%-28s %9.3fs %9.3fs %7.2fx\n",
                ("exhaustive " + std::to_string(scan_n) + "x" + std::to_string(scan_m)).c_str(),
                exhaustive_serial, exhaustive_parallel, exhaustive_serial / exhaustive_parallel);
    std::printf("results identical across paths\n");
    return 0;
}
