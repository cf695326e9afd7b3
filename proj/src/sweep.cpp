#include "qdetect/sweep.hpp"

#include <cstdint>

namespace qdetect {

std::vector<double> linear_grid(double lo, double hi, std::size_t steps) {
    std::vector<double> grid(steps);
    if (steps == 1) {
        grid[0] = lo;
        return grid;
    }
    for (std::size_t i = 0; i < steps; ++i) {
        grid[i] = lo + (hi - lo) * static_cast<double>(i) /
                           static_cast<double>(steps - 1);
    }
    return grid;
}

namespace {

SweepRow sweep_point(const BernoulliPair& model, double xi) {
    const DetectionReport report = detect(model, Prior{xi});
    return {xi, report.p_error, report.q_error, report.fidelity};
}

SurfaceRow surface_point(double xi, double p0) {
    const BernoulliPair model{p0, 0.5};
    const DetectionReport report = detect(model, Prior{xi});
    return {xi, p0, report.p_error, report.q_error};
}

std::vector<SweepRow> sweep_impl(const BernoulliPair& model,
                                 const std::vector<double>& xi_grid,
                                 bool parallel) {
    validate(model);
    std::vector<SweepRow> rows(xi_grid.size());
    const std::int64_t n = static_cast<std::int64_t>(xi_grid.size());
#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t i = 0; i < n; ++i) {
        rows[static_cast<std::size_t>(i)] =
            sweep_point(model, xi_grid[static_cast<std::size_t>(i)]);
    }
    return rows;
}

std::vector<SurfaceRow> surface_impl(const std::vector<double>& xi_grid,
                                     const std::vector<double>& p0_grid,
                                     bool parallel) {
    const std::int64_t rows_n = static_cast<std::int64_t>(xi_grid.size());
    const std::size_t cols = p0_grid.size();
    std::vector<SurfaceRow> rows(xi_grid.size() * cols);
#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t i = 0; i < rows_n; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            rows[static_cast<std::size_t>(i) * cols + j] =
                surface_point(xi_grid[static_cast<std::size_t>(i)], p0_grid[j]);
        }
    }
    return rows;
}

}  // namespace

std::vector<SweepRow> error_sweep(const BernoulliPair& model,
                                  const std::vector<double>& xi_grid) {
    return sweep_impl(model, xi_grid, true);
}

std::vector<SweepRow> error_sweep_serial(const BernoulliPair& model,
                                         const std::vector<double>& xi_grid) {
    return sweep_impl(model, xi_grid, false);
}

std::vector<SurfaceRow> error_surface(const std::vector<double>& xi_grid,
                                      const std::vector<double>& p0_grid) {
    return surface_impl(xi_grid, p0_grid, true);
}

std::vector<SurfaceRow> error_surface_serial(
    const std::vector<double>& xi_grid, const std::vector<double>& p0_grid) {
    return surface_impl(xi_grid, p0_grid, false);
}

}  // namespace qdetect
