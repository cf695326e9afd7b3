// Compares the serial reference paths against the OpenMP kernels and
// checks that both produce identical counts.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qdetect/simulator.hpp"
#include "qdetect/sweep.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& fn) {
    const auto start = Clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    const std::uint64_t trials =
        argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20000000ULL;

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP unavailable)\n");
#endif
    std::printf("trials per channel: %llu\n\n",
                static_cast<unsigned long long>(trials));

    qdetect::SimConfig cfg;
    cfg.trials = trials;
    cfg.seed = 1;
    cfg.xi = qdetect::Prior{0.5};
    cfg.model = {0.8, 1.0};

    qdetect::SimResult serial, parallel;
    const double t_cs = time_ms([&] { serial = qdetect::simulate_classical_serial(cfg); });
    const double t_cp = time_ms([&] { parallel = qdetect::simulate_classical(cfg); });
    std::printf("classical  serial %9.1f ms   parallel %9.1f ms   speedup %.2fx   %s\n",
                t_cs, t_cp, t_cs / t_cp,
                serial.errors == parallel.errors ? "counts match" : "COUNTS DIFFER");

    const double t_qs = time_ms([&] { serial = qdetect::simulate_quantum_serial(cfg); });
    const double t_qp = time_ms([&] { parallel = qdetect::simulate_quantum(cfg); });
    std::printf("quantum    serial %9.1f ms   parallel %9.1f ms   speedup %.2fx   %s\n",
                t_qs, t_qp, t_qs / t_qp,
                serial.errors == parallel.errors ? "counts match" : "COUNTS DIFFER");

    const auto grid = qdetect::linear_grid(0.0, 1.0, 100001);
    std::vector<qdetect::SweepRow> rows_s, rows_p;
    const double t_ss = time_ms([&] { rows_s = qdetect::error_sweep_serial(cfg.model, grid); });
    const double t_sp = time_ms([&] { rows_p = qdetect::error_sweep(cfg.model, grid); });
    bool same = rows_s.size() == rows_p.size();
    for (std::size_t i = 0; same && i < rows_s.size(); ++i) {
        same = rows_s[i].pe == rows_p[i].pe && rows_s[i].qe == rows_p[i].qe;
    }
    std::printf("sweep      serial %9.1f ms   parallel %9.1f ms   speedup %.2fx   %s\n",
                t_ss, t_sp, t_ss / t_sp, same ? "rows match" : "ROWS DIFFER");
    return 0;
}
