#include "qdetect/simulator.hpp"

#include <cmath>
#include <tuple>

#include "qdetect/rng.hpp"

namespace qdetect {

namespace {

struct Channel {
    // Probability of accepting relevance given the true state.
    double accept_given_m0 = 0.0;
    double accept_given_m1 = 0.0;
    double analytic_error = 0.0;
};

Channel classical_channel(const SimConfig& cfg) {
    const ClassicalDecision decision =
        classical_optimal_detector(cfg.model, cfg.xi);
    Channel ch;
    ch.accept_given_m0 = decision.p_false_alarm;
    ch.accept_given_m1 = decision.p_detection;
    ch.analytic_error = classical_error(cfg.xi, decision).first;
    return ch;
}

Channel quantum_channel(const SimConfig& cfg) {
    validate(cfg.model);
    validate(cfg.xi);
    Channel ch;
    if (!cfg.lambda && cfg.xi.xi >= 1.0) {
        // Infinite Bayes threshold: the detector always rejects.
        ch.analytic_error = 0.0;
        return ch;
    }
    const double lambda =
        cfg.lambda ? *cfg.lambda : cfg.xi.xi / (1.0 - cfg.xi.xi);
    const auto [m0, m1] = embed(cfg.model);
    try {
        const MeasurementBasis basis = optimal_measurement(m0, m1, lambda);
        std::tie(ch.accept_given_m0, ch.accept_given_m1) =
            quantum_rates(m0, m1, basis);
    } catch (const DegenerateStates&) {
        // No positive eigenvalue: constant rejection.
    }
    ch.analytic_error = cfg.xi.xi * ch.accept_given_m0 +
                        (1.0 - cfg.xi.xi) * (1.0 - ch.accept_given_m1);
    return ch;
}

// Draws (state, outcome) per trial from the counter-based stream and
// counts decision errors. Integer accumulation keeps the result
// bit-identical for any trial partitioning.
std::uint64_t count_errors(const SimConfig& cfg, const Channel& ch,
                           bool parallel) {
    const CounterRng rng(cfg.seed);
    const double xi = cfg.xi.xi;
    std::uint64_t errors = 0;
    const std::int64_t n = static_cast<std::int64_t>(cfg.trials);
#pragma omp parallel for reduction(+ : errors) schedule(static) if (parallel)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto trial = static_cast<std::uint64_t>(i);
        const bool relevant = rng.uniform(trial, 0) >= xi;
        const double accept_prob =
            relevant ? ch.accept_given_m1 : ch.accept_given_m0;
        const bool accepted = rng.uniform(trial, 1) < accept_prob;
        if (accepted != relevant) ++errors;
    }
    return errors;
}

SimResult run(const SimConfig& cfg, const Channel& ch, bool parallel) {
    validate(cfg.model);
    validate(cfg.xi);
    SimResult result;
    result.trials = cfg.trials;
    result.errors = count_errors(cfg, ch, parallel);
    result.analytic_error = ch.analytic_error;
    result.empirical_error =
        static_cast<double>(result.errors) / static_cast<double>(cfg.trials);
    result.standard_error =
        std::sqrt(result.empirical_error * (1.0 - result.empirical_error) /
                  static_cast<double>(cfg.trials));
    result.z_score =
        result.standard_error > 0.0
            ? (result.empirical_error - result.analytic_error) /
                  result.standard_error
            : 0.0;
    return result;
}

}  // namespace

SimResult simulate_classical(const SimConfig& cfg) {
    return run(cfg, classical_channel(cfg), true);
}

SimResult simulate_quantum(const SimConfig& cfg) {
    return run(cfg, quantum_channel(cfg), true);
}

SimResult simulate_classical_serial(const SimConfig& cfg) {
    return run(cfg, classical_channel(cfg), false);
}

SimResult simulate_quantum_serial(const SimConfig& cfg) {
    return run(cfg, quantum_channel(cfg), false);
}

std::vector<SweepPoint> sweep_compare(const BernoulliPair& model,
                                      const std::vector<double>& xi_grid,
                                      std::uint64_t trials,
                                      std::uint64_t seed) {
    const CounterRng schedule(seed);
    std::vector<SweepPoint> points;
    points.reserve(xi_grid.size());
    for (std::size_t i = 0; i < xi_grid.size(); ++i) {
        SimConfig cfg;
        cfg.trials = trials;
        cfg.seed = schedule.derive(i);
        cfg.xi = Prior{xi_grid[i]};
        cfg.model = model;
        points.push_back(
            {xi_grid[i], simulate_classical(cfg), simulate_quantum(cfg)});
    }
    return points;
}

}  // namespace qdetect
