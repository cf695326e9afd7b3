#pragma once

#include <cstddef>
#include <vector>

#include "qdetect/core.hpp"

namespace qdetect {

/// Evenly spaced grid of `steps` points on [lo, hi], endpoints included.
std::vector<double> linear_grid(double lo, double hi, std::size_t steps);

struct SweepRow {
    double xi = 0.0;
    double pe = 0.0;
    double qe = 0.0;
    double fidelity = 0.0;
};

/// Classical and quantum error curves of one model over a prior grid.
std::vector<SweepRow> error_sweep(const BernoulliPair& model,
                                  const std::vector<double>& xi_grid);
std::vector<SweepRow> error_sweep_serial(const BernoulliPair& model,
                                         const std::vector<double>& xi_grid);

struct SurfaceRow {
    double xi = 0.0;
    double p1_m0 = 0.0;
    double pe = 0.0;
    double qe = 0.0;
};

/// Error surface over (prior, p(1|m0)) under the pseudo-relevance model
/// p(1|m1) = 1/2. Rows ordered by xi, then p1_m0.
std::vector<SurfaceRow> error_surface(const std::vector<double>& xi_grid,
                                      const std::vector<double>& p0_grid);
std::vector<SurfaceRow> error_surface_serial(const std::vector<double>& xi_grid,
                                             const std::vector<double>& p0_grid);

}  // namespace qdetect
