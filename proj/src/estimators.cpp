#include "qdetect/estimators.hpp"

#include <cmath>

namespace qdetect {

double Bm25Density::operator()(double t) const {
    return B * std::pow(p / (1.0 - p), t);
}

BernoulliPair relative_frequency(const TermCounts& counts) {
    if (counts.N_rel == 0 || counts.N_nonrel == 0) {
        throw EmptyStratum("no judged documents in a relevance stratum");
    }
    return {static_cast<double>(counts.n_nonrel) / static_cast<double>(counts.N_nonrel),
            static_cast<double>(counts.n_rel) / static_cast<double>(counts.N_rel)};
}

BernoulliPair pseudo_relevance(std::uint64_t n, std::uint64_t N) {
    return {(static_cast<double>(n) + 0.5) / (static_cast<double>(N) + 1.0), 0.5};
}

double bm25_saturation(double tf, const Bm25Params& params) {
    const double len_norm =
        (1.0 - params.b) + params.b * params.doc_len / params.avg_doc_len;
    return tf * (params.k1 + 1.0) / (tf + params.k1 * len_norm);
}

Bm25Density bm25_density(double p, double n_max) {
    if (p <= 0.0 || p >= 1.0) {
        throw DegenerateProbability("density undefined at p in {0, 1}");
    }
    Bm25Density d;
    d.p = p;
    d.n_max = n_max;
    if (std::abs(p - 0.5) <= 1e-12) {
        d.B = 1.0 / n_max;
    } else {
        const double ratio = p / (1.0 - p);
        d.B = std::log(1.0 / ratio) / (1.0 - std::pow(ratio, n_max));
    }
    return d;
}

BernoulliPair bm25_bernoulli(double tf_rel_model, double tf_nonrel_model) {
    BernoulliPair p{tf_nonrel_model, tf_rel_model};
    validate(p);
    return p;
}

}  // namespace qdetect
