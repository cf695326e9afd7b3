#pragma once

#include <cstdint>
#include <stdexcept>

#include "qdetect/core.hpp"

namespace qdetect {

/// Raised when a relevance stratum is empty and relative frequencies are
/// undefined; callers fall back to pseudo_relevance.
struct EmptyStratum : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateProbability : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Document-level occurrence counts of one term within the judged strata
/// of one topic.
struct TermCounts {
    std::uint64_t n_rel = 0;     // relevant docs containing the term
    std::uint64_t N_rel = 0;     // relevant docs
    std::uint64_t n_nonrel = 0;  // non-relevant docs containing the term
    std::uint64_t N_nonrel = 0;  // non-relevant docs
};

struct Bm25Params {
    double k1 = 1.2;
    double b = 0.75;
    double doc_len = 0.0;
    double avg_doc_len = 1.0;
    double n_max = 1.0;  // largest observed saturation value
};

/// Continuous density b(t) = B * (p/(1-p))^t on [0, n_max].
struct Bm25Density {
    double p = 0.5;
    double B = 1.0;
    double n_max = 1.0;

    double operator()(double t) const;
};

/// p(1|m1) = n_rel/N_rel, p(1|m0) = n_nonrel/N_nonrel.
/// Throws EmptyStratum when either denominator is zero.
BernoulliPair relative_frequency(const TermCounts& counts);

/// Judgment-free defaults: p(1|m0) = (n + 1/2)/(N + 1), p(1|m1) = 1/2.
BernoulliPair pseudo_relevance(std::uint64_t n, std::uint64_t N);

/// Okapi saturation: tf (k1+1) / (tf + k1 ((1-b) + b dl/avdl)).
double bm25_saturation(double tf, const Bm25Params& params);

/// Normalizing constant for the saturation-value density: B = 1/n_max at
/// p = 1/2, else log((1-p)/p) / (1 - (p/(1-p))^n_max).
/// Throws DegenerateProbability at p in {0, 1}.
Bm25Density bm25_density(double p, double n_max);

/// Packages externally chosen presence masses for the detection core.
BernoulliPair bm25_bernoulli(double tf_rel_model, double tf_nonrel_model);

}  // namespace qdetect
