#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qdetect/core.hpp"

namespace qdetect {

struct SimConfig {
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    Prior xi;
    BernoulliPair model;
    // Decision threshold for the quantum channel; Bayes xi/(1-xi) when unset.
    std::optional<double> lambda;
};

struct SimResult {
    double empirical_error = 0.0;
    double analytic_error = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t errors = 0;
    double standard_error = 0.0;  // binomial, sqrt(p(1-p)/trials)
    double z_score = 0.0;
};

/// Classical symbol channel: draw the relevance state from the prior, a
/// binary symbol from the state's distribution, decide by the optimal
/// region of acceptance. Deterministic for a fixed seed, independent of
/// thread count.
SimResult simulate_classical(const SimConfig& cfg);

/// Projective-measurement channel: the drawn state is embedded and the
/// optimal-measurement outcome is sampled from its Born distribution.
SimResult simulate_quantum(const SimConfig& cfg);

/// Serial reference paths, kept for testing the parallel kernels.
SimResult simulate_classical_serial(const SimConfig& cfg);
SimResult simulate_quantum_serial(const SimConfig& cfg);

struct SweepPoint {
    double xi = 0.0;
    SimResult classical;
    SimResult quantum;
};

/// Paired simulations over a prior grid, one derived seed per grid point.
std::vector<SweepPoint> sweep_compare(const BernoulliPair& model,
                                      const std::vector<double>& xi_grid,
                                      std::uint64_t trials, std::uint64_t seed);

}  // namespace qdetect
