#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdetect/core.hpp"
#include "qdetect/estimators.hpp"

namespace qdetect::corpus {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DuplicateDocId : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownTopic : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Document {
    std::string doc_id;
    std::string text;
};

struct Topic {
    std::string topic_id;
    std::vector<std::string> title_terms;
};

struct Judgment {
    std::string topic_id;
    std::string doc_id;
    bool relevant = false;
};

struct TermTopicStats {
    std::string topic_id;
    std::string term;
    TermCounts counts;
    std::uint64_t collection_df = 0;
    std::uint64_t collection_size = 0;
};

/// Lowercase, split on non-alphanumeric, drop empties. No stemming, no
/// stopword removal.
std::vector<std::string> tokenize(const std::string& text);

/// Immutable view of documents, topics, and judgments with term presence
/// resolved at document level.
class Collection {
public:
    std::uint64_t size() const { return doc_count_; }
    const std::map<std::string, Topic>& topics() const { return topics_; }
    const Topic& topic(const std::string& topic_id) const;

    std::uint64_t document_frequency(const std::string& term) const;
    TermTopicStats term_topic_stats(const std::string& topic_id,
                                    const std::string& term) const;

    /// Mean over the topic's title terms of collection df / collection size.
    double avg_relative_frequency(const std::string& topic_id) const;

    struct ErrorCurves {
        std::vector<double> xi_grid;
        std::vector<std::string> terms;
        // curves[t][i]: term t at grid point i
        std::vector<std::vector<double>> pe;
        std::vector<std::vector<double>> qe;
        std::vector<double> term_fidelity;
        std::vector<double> avg_pe;  // pointwise mean over terms
        std::vector<double> avg_qe;
    };

    /// Per-term and averaged (P_e, Q_e) series over the prior grid, with
    /// relative-frequency estimation falling back to pseudo-relevance on
    /// an empty stratum.
    ErrorCurves topic_error_curves(const std::string& topic_id,
                                   const std::vector<double>& xi_grid) const;

    friend Collection ingest(const std::string& documents_path,
                             const std::string& topics_path,
                             const std::string& qrels_path);

private:
    std::uint64_t doc_count_ = 0;
    std::map<std::string, Topic> topics_;
    // term -> set of doc ids containing it
    std::map<std::string, std::set<std::string>> postings_;
    // topic -> doc -> relevant
    std::map<std::string, std::map<std::string, bool>> judgments_;
};

/// Loads JSON Lines documents, tab-separated topics, and TREC qrels.
/// Unjudged documents count toward collection size only; qrels rows for
/// unknown topics or documents are skipped with a warning.
Collection ingest(const std::string& documents_path,
                  const std::string& topics_path,
                  const std::string& qrels_path);

}  // namespace qdetect::corpus
