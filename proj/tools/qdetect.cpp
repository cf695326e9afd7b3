#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qdetect/core.hpp"
#include "qdetect/corpus.hpp"
#include "qdetect/estimators.hpp"
#include "qdetect/lattice.hpp"
#include "qdetect/log.hpp"
#include "qdetect/simulator.hpp"
#include "qdetect/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitStatFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string fmt4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
    if (!out) {
        throw std::ios_base::failure("cannot open output file " + path);
    }
    return out;
}

struct CorpusOptions {
    std::string docs_path;
    std::string topics_path;
    std::string qrels_path;

    void attach(CLI::App* cmd, bool required) {
        auto* d = cmd->add_option("--docs", docs_path, "documents (JSON Lines)");
        auto* t = cmd->add_option("--topics", topics_path, "topics (TSV)");
        auto* q = cmd->add_option("--qrels", qrels_path, "qrels (TREC format)");
        if (required) {
            d->required();
            t->required();
            q->required();
        }
    }

    bool given() const { return !docs_path.empty(); }

    qdetect::corpus::Collection load() const {
        return qdetect::corpus::ingest(docs_path, topics_path, qrels_path);
    }
};

void print_report(const qdetect::DetectionReport& r) {
    std::cout << "lambda        " << fmt6(r.lambda) << "\n"
              << "gamma         " << fmt6(r.gamma) << "\n"
              << "theta         " << fmt6(r.theta) << "\n"
              << "fidelity      " << fmt6(r.fidelity) << "\n"
              << "region        " << qdetect::region_to_string(r.classical.region)
              << "\n"
              << "P0            " << fmt6(r.classical.p_false_alarm) << "\n"
              << "Pd            " << fmt6(r.classical.p_detection) << "\n"
              << "Pe            " << fmt6(r.p_error) << "\n"
              << "Pc            " << fmt6(r.p_correct) << "\n";
    if (r.basis) {
        std::cout << "mu0           (" << fmt6(r.basis->mu0.a0) << ", "
                  << fmt6(r.basis->mu0.a1) << ")\n"
                  << "mu1           (" << fmt6(r.basis->mu1.a0) << ", "
                  << fmt6(r.basis->mu1.a1) << ")\n";
    }
    std::cout << "Q0            " << fmt6(r.q_false_alarm) << "\n"
              << "Qd            " << fmt6(r.q_detection) << "\n"
              << "Qe            " << fmt6(r.q_error) << "\n"
              << "Qc            " << fmt6(r.q_correct) << "\n";
}

void print_sim_result(const char* channel, const qdetect::SimResult& r) {
    std::cout << "channel        " << channel << "\n"
              << "trials         " << r.trials << "\n"
              << "errors         " << r.errors << "\n"
              << "empirical      " << fmt6(r.empirical_error) << "\n"
              << "analytic       " << fmt6(r.analytic_error) << "\n"
              << "standard_error " << fmt6(r.standard_error) << "\n"
              << "z_score        " << fmt6(r.z_score) << "\n";
}

void print_subspace(const char* name, const qdetect::lattice::Subspace& s) {
    std::cout << name << ": rank " << s.rank();
    for (const auto& v : s.basis()) {
        std::cout << " [";
        for (std::size_t i = 0; i < v.size(); ++i) {
            std::cout << (i ? ", " : "") << fmt6(v[i]);
        }
        std::cout << "]";
    }
    std::cout << "\n";
}

int run_lattice_demo() {
    using qdetect::lattice::Subspace;
    const double s = 1.0 / std::sqrt(2.0);

    std::cout << "oblique configuration\n";
    const Subspace e2 = Subspace::ray({0.0, 1.0, 0.0});
    const Subspace ray_x = Subspace::ray({s, s, 0.0});
    const Subspace ray_y = Subspace::ray({s, -s, 0.0});
    auto gap = qdetect::lattice::distributivity_gap(e2, ray_y, ray_x);
    print_subspace("left  meet(a, span(b,c))", gap.left);
    print_subspace("right span(meet(a,b), meet(a,c))", gap.right);
    std::cout << "distributive: " << (gap.equal ? "true" : "false") << "\n\n";

    std::cout << "orthogonal configuration\n";
    const Subspace e1 = Subspace::ray({1.0, 0.0, 0.0});
    const Subspace e3 = Subspace::ray({0.0, 0.0, 1.0});
    auto ortho = qdetect::lattice::distributivity_gap(e2, e1, e3);
    print_subspace("left  meet(a, span(b,c))", ortho.left);
    print_subspace("right span(meet(a,b), meet(a,c))", ortho.right);
    std::cout << "distributive: " << (ortho.equal ? "true" : "false") << "\n";
    return kExitOk;
}

// Resolves the model for sweep: explicit pair, topic+term, topic average,
// or pseudo-relevance counts.
struct ModelSource {
    std::optional<double> p0, p1;
    CorpusOptions corpus;
    std::string topic_id;
    std::string term;
    std::optional<std::uint64_t> pseudo_n, pseudo_N;
};

qdetect::BernoulliPair model_for_term(const qdetect::corpus::Collection& c,
                                      const std::string& topic_id,
                                      const std::string& term) {
    const auto stats = c.term_topic_stats(topic_id, term);
    try {
        return qdetect::relative_frequency(stats.counts);
    } catch (const qdetect::EmptyStratum&) {
        qdetect::log::info("empty stratum for term '" + term +
                           "', using pseudo-relevance");
        return qdetect::pseudo_relevance(stats.collection_df,
                                         stats.collection_size);
    }
}

int run_sweep(const ModelSource& src, double xi_min, double xi_max,
              std::size_t steps, const std::string& out_path) {
    const auto grid = qdetect::linear_grid(xi_min, xi_max, steps);
    std::vector<qdetect::SweepRow> rows;

    if (src.p0 && src.p1) {
        rows = qdetect::error_sweep({*src.p0, *src.p1}, grid);
    } else if (src.pseudo_n && src.pseudo_N) {
        rows = qdetect::error_sweep(
            qdetect::pseudo_relevance(*src.pseudo_n, *src.pseudo_N), grid);
    } else if (src.corpus.given() && !src.topic_id.empty()) {
        const auto collection = src.corpus.load();
        if (!src.term.empty()) {
            rows = qdetect::error_sweep(
                model_for_term(collection, src.topic_id, src.term), grid);
        } else {
            // Topic average: pointwise mean over the title terms.
            const auto curves =
                collection.topic_error_curves(src.topic_id, grid);
            double mean_fidelity = 0.0;
            for (double f : curves.term_fidelity) {
                mean_fidelity += f / static_cast<double>(curves.terms.size());
            }
            for (std::size_t i = 0; i < grid.size(); ++i) {
                rows.push_back({grid[i], curves.avg_pe[i], curves.avg_qe[i],
                                mean_fidelity});
            }
        }
    } else {
        throw CLI::ValidationError(
            "model", "give --p0/--p1, --pseudo-n/--pseudo-N, or corpus paths "
                     "with --topic");
    }

    auto out = open_out(out_path);
    out << "xi,pe,qe,fidelity\n";
    for (const auto& row : rows) {
        out << fmt6(row.xi) << "," << fmt6(row.pe) << "," << fmt6(row.qe)
            << "," << fmt6(row.fidelity) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classical vs. quantum minimum-error relevance detection"};
    app.require_subcommand(1);

    // detect
    double p0 = 0.0, p1 = 0.0, xi = 0.5;
    std::optional<double> lambda;
    auto* detect_cmd =
        app.add_subcommand("detect", "report for one (model, prior) instance");
    detect_cmd->add_option("p0", p0, "p(1|m0)")->required();
    detect_cmd->add_option("p1", p1, "p(1|m1)")->required();
    detect_cmd->add_option("xi", xi, "prior of non-relevance")->required();
    detect_cmd->add_option("--lambda", lambda, "decision threshold override");

    // sweep
    ModelSource sweep_src;
    double xi_min = 0.0, xi_max = 1.0;
    std::size_t steps = 101;
    std::string out_path;
    auto* sweep_cmd = app.add_subcommand("sweep", "error curves over the prior");
    sweep_cmd->add_option("--p0", sweep_src.p0, "p(1|m0)");
    sweep_cmd->add_option("--p1", sweep_src.p1, "p(1|m1)");
    sweep_cmd->add_option("--pseudo-n", sweep_src.pseudo_n, "doc frequency");
    sweep_cmd->add_option("--pseudo-N", sweep_src.pseudo_N, "collection size");
    sweep_src.corpus.attach(sweep_cmd, false);
    sweep_cmd->add_option("--topic", sweep_src.topic_id, "topic id");
    sweep_cmd->add_option("--term", sweep_src.term,
                          "title term (omit for topic average)");
    sweep_cmd->add_option("--xi-min", xi_min, "grid start")
        ->check(CLI::Range(0.0, 1.0));
    sweep_cmd->add_option("--xi-max", xi_max, "grid end")
        ->check(CLI::Range(0.0, 1.0));
    sweep_cmd->add_option("--steps", steps, "grid points")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
    sweep_cmd->add_option("--out", out_path, "CSV output path")->required();

    // surface
    double s_p0_min = 0.01, s_p0_max = 0.99;
    std::size_t s_p0_steps = 99;
    auto* surface_cmd = app.add_subcommand(
        "surface", "error surface over prior and p(1|m0), pseudo-relevance model");
    surface_cmd->add_option("--xi-min", xi_min, "prior grid start")
        ->check(CLI::Range(0.0, 1.0));
    surface_cmd->add_option("--xi-max", xi_max, "prior grid end")
        ->check(CLI::Range(0.0, 1.0));
    surface_cmd->add_option("--steps", steps, "prior grid points")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
    surface_cmd->add_option("--p0-min", s_p0_min, "p(1|m0) grid start");
    surface_cmd->add_option("--p0-max", s_p0_max, "p(1|m0) grid end");
    surface_cmd->add_option("--p0-steps", s_p0_steps, "p(1|m0) grid points")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
    surface_cmd->add_option("--out", out_path, "CSV output path")->required();

    // topics
    CorpusOptions topics_corpus;
    auto* topics_cmd =
        app.add_subcommand("topics", "average relative frequency per topic");
    topics_corpus.attach(topics_cmd, true);
    topics_cmd->add_option("--out", out_path, "CSV output path")->required();

    // simulate
    std::uint64_t trials = 1000000, seed = 0;
    std::string channel = "classical";
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo channel run");
    sim_cmd->add_option("--p0", p0, "p(1|m0)")->required();
    sim_cmd->add_option("--p1", p1, "p(1|m1)")->required();
    sim_cmd->add_option("--xi", xi, "prior of non-relevance")->required();
    sim_cmd->add_option("--trials", trials, "number of trials")
        ->check(CLI::PositiveNumber);
    sim_cmd->add_option("--seed", seed, "RNG seed");
    sim_cmd->add_option("--lambda", lambda, "decision threshold override");
    sim_cmd->add_option("--channel", channel, "classical|quantum")
        ->check(CLI::IsMember({"classical", "quantum"}));

    // lattice-demo
    app.add_subcommand("lattice-demo",
                       "distributive-law failure for oblique subspaces");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (detect_cmd->parsed()) {
            print_report(qdetect::detect({p0, p1}, qdetect::Prior{xi}, lambda));
            return kExitOk;
        }
        if (sweep_cmd->parsed()) {
            if (xi_min > xi_max) {
                std::cerr << "error: --xi-min must not exceed --xi-max\n";
                return kExitUsage;
            }
            return run_sweep(sweep_src, xi_min, xi_max, steps, out_path);
        }
        if (surface_cmd->parsed()) {
            if (xi_min > xi_max || s_p0_min > s_p0_max || s_p0_min <= 0.0 ||
                s_p0_max >= 1.0) {
                std::cerr << "error: bad grid bounds (p0 grid must stay inside "
                             "(0,1))\n";
                return kExitUsage;
            }
            const auto rows =
                qdetect::error_surface(qdetect::linear_grid(xi_min, xi_max, steps),
                                       qdetect::linear_grid(s_p0_min, s_p0_max,
                                                            s_p0_steps));
            auto out = open_out(out_path);
            out << "xi,p1_m0,pe,qe\n";
            for (const auto& row : rows) {
                out << fmt6(row.xi) << "," << fmt6(row.p1_m0) << ","
                    << fmt6(row.pe) << "," << fmt6(row.qe) << "\n";
            }
            return kExitOk;
        }
        if (topics_cmd->parsed()) {
            const auto collection = topics_corpus.load();
            auto out = open_out(out_path);
            out << "topic_id,avg_relative_frequency\n";
            for (const auto& [topic_id, topic] : collection.topics()) {
                out << topic_id << ","
                    << fmt4(collection.avg_relative_frequency(topic_id)) << "\n";
            }
            return kExitOk;
        }
        if (sim_cmd->parsed()) {
            qdetect::SimConfig cfg;
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.xi = qdetect::Prior{xi};
            cfg.model = {p0, p1};
            cfg.lambda = lambda;
            const qdetect::SimResult result = channel == "quantum"
                                                  ? qdetect::simulate_quantum(cfg)
                                                  : qdetect::simulate_classical(cfg);
            print_sim_result(channel.c_str(), result);
            return std::abs(result.z_score) < 4.0 ? kExitOk : kExitStatFail;
        }
        return run_lattice_demo();
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const qdetect::corpus::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
