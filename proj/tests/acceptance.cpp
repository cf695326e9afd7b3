// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qdetect/core.hpp"
#include "qdetect/corpus.hpp"
#include "qdetect/estimators.hpp"
#include "qdetect/lattice.hpp"
#include "qdetect/simulator.hpp"
#include "qdetect/sweep.hpp"

using namespace qdetect;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : " - ", detail.c_str());
    if (!ok) ++failures;
}

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
}

bool collinear(const StateVector2& v, double x, double y) {
    return std::abs(v.a0 * y - v.a1 * x) <= 1e-12 * std::hypot(x, y);
}

void worked_example() {
    const auto start = Clock::now();
    const auto r = detect({0.8, 1.0}, Prior{0.5}, 1.0);
    const auto [m0, m1] = embed({0.8, 1.0});
    const auto h = helstrom_operator(m0, m1, 1.0);
    const auto eig = eigendecompose(h);
    const double ms = elapsed_ms(start);

    const double root5 = std::sqrt(5.0);
    bool ok = std::abs(r.p_error - 0.4) < 1e-12 &&
              std::abs(r.p_correct - 0.6) < 1e-12 &&
              std::abs(r.q_error - (5.0 - root5) / 10.0) < 1e-12 &&
              std::abs(h.h00 - 0.2) < 1e-12 && std::abs(h.h01 + 0.4) < 1e-12 &&
              std::abs(h.h11 + 0.2) < 1e-12 &&
              std::abs(eig[0].value - root5 / 5.0) < 1e-12 &&
              std::abs(eig[1].value + root5 / 5.0) < 1e-12 &&
              r.basis.has_value() &&
              collinear(r.basis->mu1, -(1.0 + root5) / 2.0, 1.0) &&
              collinear(r.basis->mu0, (root5 - 1.0) / 2.0, 1.0) && ms < 1.0;
    std::ostringstream detail;
    detail << "Pe=" << r.p_error << " Qe=" << r.q_error << " " << ms << " ms";
    report("worked example closed form", ok, detail.str());
}

void theorem_suite() {
    const auto start = Clock::now();
    bool ok = true;
    std::mt19937_64 gen(424242);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 10000 && ok; ++i) {
        const double p0 = u(gen), p1 = u(gen), xi = u(gen);
        const double qe = quantum_error(Prior{xi}, fidelity({p0, p1})).first;
        ok = qe <= testing::brute_force_classical(p0, p1, xi).risk + 1e-12;
    }
    for (int i = 1; i < 50 && ok; ++i) {
        for (int j = 1; j < 50 && ok; ++j) {
            for (int k = 0; k <= 20 && ok; ++k) {
                const double p0 = i / 50.0, p1 = j / 50.0, xi = k / 20.0;
                const double qe =
                    quantum_error(Prior{xi}, fidelity({p0, p1})).first;
                ok = qe <=
                     testing::brute_force_classical(p0, p1, xi).risk + 1e-12;
            }
        }
    }
    const double ms = elapsed_ms(start);
    ok = ok && ms < 10000.0;
    std::ostringstream detail;
    detail << "10000 random + 50x50x21 grid, " << ms << " ms";
    report("quantum error never exceeds the classical optimum", ok,
           detail.str());
}

void born_rule() {
    bool ok = true;
    const StateVector2 one{1.0, 0.0}, zero{0.0, 1.0};
    for (int i = 0; i <= 100 && ok; ++i) {
        for (int j = 0; j <= 100 && ok; ++j) {
            const BernoulliPair p{i / 100.0, j / 100.0};
            const auto [a, b] = embed(p);
            ok = std::abs(born_probability(a, one) - p.p1_m0) < 1e-12 &&
                 std::abs(born_probability(a, zero) - (1.0 - p.p1_m0)) < 1e-12 &&
                 std::abs(born_probability(b, one) - p.p1_m1) < 1e-12 &&
                 std::abs(born_probability(b, zero) - (1.0 - p.p1_m1)) < 1e-12;
        }
    }
    report("embedding reproduces the conditional distributions", ok);
}

void crime_topic() {
    const auto model = relative_frequency({65, 474, 223, 1234});
    const double lam = fidelity(model);
    const auto rows = error_sweep(model, {0.5});
    const double gap = std::abs(rows[0].pe - rows[0].qe);
    const bool ok = std::abs(lam - 0.998) < 2e-3 && gap < 0.01;
    std::ostringstream detail;
    detail << "fidelity=" << lam << " |Pe-Qe|@0.5=" << gap;
    report("topic-301 crime statistics", ok, detail.str());
}

void pseudo_relevance_identity() {
    bool ok = true;
    std::mt19937_64 gen(8);
    for (int i = 0; i < 1000 && ok; ++i) {
        const std::uint64_t N =
            std::uniform_int_distribution<std::uint64_t>(1, 10000)(gen);
        const std::uint64_t n =
            std::uniform_int_distribution<std::uint64_t>(0, N)(gen);
        const auto p = pseudo_relevance(n, N);
        const double closed =
            0.5 * std::pow(std::sqrt(p.p1_m0) + std::sqrt(1.0 - p.p1_m0), 2.0);
        ok = std::abs(fidelity(p) - closed) < 1e-12;
    }
    report("pseudo-relevance fidelity identity", ok);
}

void bm25_normalization() {
    bool ok = true;
    for (int pi = 1; pi <= 99 && ok; ++pi) {
        const double p = pi / 100.0;
        for (int ni = 1; ni <= 40 && ok; ++ni) {
            const double n_max = 0.5 * ni;
            const auto d = bm25_density(p, n_max);
            const double integral = testing::adaptive_simpson(
                [&](double t) { return d(t); }, 0.0, n_max);
            ok = std::abs(integral - 1.0) < 1e-9;
        }
    }
    ok = ok && bm25_density(0.5, 5.0).B == 1.0 / 5.0;
    report("saturation density normalizes on the 99x40 grid", ok);
}

void monte_carlo() {
    const auto start = Clock::now();
    SimConfig cfg;
    cfg.trials = 1000000;
    cfg.seed = 20260823;
    cfg.xi = Prior{0.5};
    cfg.model = {0.8, 1.0};
    const SimResult classical = simulate_classical(cfg);
    const SimResult classical2 = simulate_classical(cfg);
    cfg.lambda = 1.0;
    const SimResult quantum = simulate_quantum(cfg);
    const SimResult quantum2 = simulate_quantum(cfg);
    const double ms = elapsed_ms(start);

    const bool ok =
        std::abs(classical.empirical_error - 0.4) <
            4.0 * classical.standard_error &&
        std::abs(quantum.empirical_error - 0.27639) <
            4.0 * quantum.standard_error &&
        classical.errors == classical2.errors &&
        quantum.errors == quantum2.errors && ms < 30000.0;
    std::ostringstream detail;
    detail << "classical=" << classical.empirical_error
           << " quantum=" << quantum.empirical_error << " " << ms << " ms";
    report("Monte Carlo channels match the analytic errors", ok, detail.str());
}

void lattice_demo() {
    using lattice::Subspace;
    const double s = 1.0 / std::sqrt(2.0);
    const Subspace e2 = Subspace::ray({0.0, 1.0, 0.0});
    const auto gap = lattice::distributivity_gap(
        e2, Subspace::ray({s, -s, 0.0}), Subspace::ray({s, s, 0.0}));
    const auto ortho = lattice::distributivity_gap(
        e2, Subspace::ray({1.0, 0.0, 0.0}), Subspace::ray({0.0, 0.0, 1.0}));
    const bool ok = gap.left.rank() == 1 && gap.left.same_as(e2) &&
                    gap.right.rank() == 0 && !gap.equal && ortho.equal;
    report("distributive law fails for oblique subspaces", ok);
}

void fixture_corpus() {
    const std::string fixture = FIXTURE_DIR;
    const auto c = corpus::ingest(fixture + "/documents.jsonl",
                                  fixture + "/topics.tsv",
                                  fixture + "/qrels.txt");
    bool ok = true;
    std::ifstream oracle(fixture + "/expected_counts.tsv");
    std::string line;
    std::getline(oracle, line);
    while (ok && std::getline(oracle, line)) {
        std::istringstream fields(line);
        std::string topic_id, term;
        std::uint64_t n_rel, N_rel, n_nonrel, N_nonrel, df, size;
        fields >> topic_id >> term >> n_rel >> N_rel >> n_nonrel >> N_nonrel >>
            df >> size;
        const auto stats = c.term_topic_stats(topic_id, term);
        ok = stats.counts.n_rel == n_rel && stats.counts.N_rel == N_rel &&
             stats.counts.n_nonrel == n_nonrel &&
             stats.counts.N_nonrel == N_nonrel && stats.collection_df == df &&
             stats.collection_size == size;
    }

    std::ifstream topics_oracle(fixture + "/expected_topics.csv");
    std::getline(topics_oracle, line);
    while (ok && std::getline(topics_oracle, line)) {
        const auto comma = line.find(',');
        const std::string topic_id = line.substr(0, comma);
        char formatted[32];
        std::snprintf(formatted, sizeof(formatted), "%.4f",
                      c.avg_relative_frequency(topic_id));
        ok = line.substr(comma + 1) == formatted;
    }

    const auto grid = linear_grid(0.0, 1.0, 51);
    for (const auto& [topic_id, topic] : c.topics()) {
        const auto curves = c.topic_error_curves(topic_id, grid);
        for (std::size_t t = 0; t < curves.terms.size() && ok; ++t) {
            for (std::size_t i = 0; i < grid.size() && ok; ++i) {
                ok = curves.qe[t][i] <= curves.pe[t][i] + 1e-12;
            }
        }
    }
    report("fixture corpus reproduces the hand tally", ok);
}

}  // namespace

int main() {
    worked_example();
    theorem_suite();
    born_rule();
    crime_topic();
    pseudo_relevance_identity();
    bm25_normalization();
    monte_carlo();
    lattice_demo();
    fixture_corpus();
    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
