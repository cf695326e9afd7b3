#include "qdetect/corpus.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qdetect/log.hpp"

namespace qdetect::corpus {

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::string current;
    for (unsigned char c : text) {
        if (std::isalnum(c)) {
            current.push_back(static_cast<char>(std::tolower(c)));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

const Topic& Collection::topic(const std::string& topic_id) const {
    auto it = topics_.find(topic_id);
    if (it == topics_.end()) throw UnknownTopic("unknown topic: " + topic_id);
    return it->second;
}

std::uint64_t Collection::document_frequency(const std::string& term) const {
    auto it = postings_.find(term);
    return it == postings_.end() ? 0 : it->second.size();
}

TermTopicStats Collection::term_topic_stats(const std::string& topic_id,
                                            const std::string& term) const {
    topic(topic_id);  // existence check
    TermTopicStats stats;
    stats.topic_id = topic_id;
    stats.term = term;
    stats.collection_df = document_frequency(term);
    stats.collection_size = doc_count_;

    auto postings_it = postings_.find(term);
    auto judged_it = judgments_.find(topic_id);
    if (judged_it != judgments_.end()) {
        for (const auto& [doc_id, relevant] : judged_it->second) {
            const bool present =
                postings_it != postings_.end() && postings_it->second.count(doc_id) > 0;
            if (relevant) {
                ++stats.counts.N_rel;
                if (present) ++stats.counts.n_rel;
            } else {
                ++stats.counts.N_nonrel;
                if (present) ++stats.counts.n_nonrel;
            }
        }
    }
    return stats;
}

double Collection::avg_relative_frequency(const std::string& topic_id) const {
    const Topic& t = topic(topic_id);
    double sum = 0.0;
    for (const auto& term : t.title_terms) {
        sum += static_cast<double>(document_frequency(term)) /
               static_cast<double>(doc_count_);
    }
    return sum / static_cast<double>(t.title_terms.size());
}

Collection::ErrorCurves Collection::topic_error_curves(
    const std::string& topic_id, const std::vector<double>& xi_grid) const {
    const Topic& t = topic(topic_id);
    ErrorCurves curves;
    curves.xi_grid = xi_grid;
    curves.terms = t.title_terms;

    for (const auto& term : t.title_terms) {
        const TermTopicStats stats = term_topic_stats(topic_id, term);
        BernoulliPair model;
        try {
            model = relative_frequency(stats.counts);
        } catch (const EmptyStratum&) {
            log::info("empty stratum for term '" + term +
                      "', using pseudo-relevance");
            model = pseudo_relevance(stats.collection_df, stats.collection_size);
        }
        curves.term_fidelity.push_back(fidelity(model));
        std::vector<double> pe_row, qe_row;
        pe_row.reserve(xi_grid.size());
        qe_row.reserve(xi_grid.size());
        for (double xi : xi_grid) {
            const DetectionReport report = detect(model, Prior{xi});
            pe_row.push_back(report.p_error);
            qe_row.push_back(report.q_error);
        }
        curves.pe.push_back(std::move(pe_row));
        curves.qe.push_back(std::move(qe_row));
    }

    const double n_terms = static_cast<double>(curves.terms.size());
    curves.avg_pe.assign(xi_grid.size(), 0.0);
    curves.avg_qe.assign(xi_grid.size(), 0.0);
    for (std::size_t term = 0; term < curves.pe.size(); ++term) {
        for (std::size_t i = 0; i < xi_grid.size(); ++i) {
            curves.avg_pe[i] += curves.pe[term][i] / n_terms;
            curves.avg_qe[i] += curves.qe[term][i] / n_terms;
        }
    }
    return curves;
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return in;
}

}  // namespace

Collection ingest(const std::string& documents_path,
                  const std::string& topics_path,
                  const std::string& qrels_path) {
    Collection c;
    std::set<std::string> doc_ids;

    {
        std::ifstream in = open_or_throw(documents_path);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            nlohmann::json doc;
            try {
                doc = nlohmann::json::parse(line);
            } catch (const nlohmann::json::parse_error& e) {
                throw ParseError(documents_path + ":" + std::to_string(line_no) +
                                 ": " + e.what());
            }
            if (!doc.contains("doc_id") || !doc["doc_id"].is_string() ||
                !doc.contains("text") || !doc["text"].is_string()) {
                throw ParseError(documents_path + ":" + std::to_string(line_no) +
                                 ": expected string fields doc_id and text");
            }
            const std::string doc_id = doc["doc_id"].get<std::string>();
            if (doc_id.empty()) {
                throw ParseError(documents_path + ":" + std::to_string(line_no) +
                                 ": empty doc_id");
            }
            if (!doc_ids.insert(doc_id).second) {
                throw DuplicateDocId("duplicate doc_id: " + doc_id);
            }
            ++c.doc_count_;
            for (const auto& token : tokenize(doc["text"].get<std::string>())) {
                c.postings_[token].insert(doc_id);
            }
        }
    }

    {
        std::ifstream in = open_or_throw(topics_path);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            const auto tab = line.find('\t');
            if (tab == std::string::npos) {
                throw ParseError(topics_path + ":" + std::to_string(line_no) +
                                 ": expected topic_id<TAB>title");
            }
            Topic topic;
            topic.topic_id = line.substr(0, tab);
            topic.title_terms = tokenize(line.substr(tab + 1));
            if (topic.topic_id.empty() || topic.title_terms.empty()) {
                throw ParseError(topics_path + ":" + std::to_string(line_no) +
                                 ": empty topic_id or title");
            }
            c.topics_[topic.topic_id] = std::move(topic);
        }
    }

    {
        std::ifstream in = open_or_throw(qrels_path);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            std::istringstream fields(line);
            std::string topic_id, iteration, doc_id;
            long relevance = 0;
            if (!(fields >> topic_id >> iteration >> doc_id >> relevance)) {
                throw ParseError(qrels_path + ":" + std::to_string(line_no) +
                                 ": expected topic_id iteration doc_id relevance");
            }
            if (c.topics_.find(topic_id) == c.topics_.end()) {
                log::warn(qrels_path + ":" + std::to_string(line_no) +
                          ": unknown topic " + topic_id + ", skipping");
                continue;
            }
            if (doc_ids.find(doc_id) == doc_ids.end()) {
                log::warn(qrels_path + ":" + std::to_string(line_no) +
                          ": unknown doc_id " + doc_id + ", skipping");
                continue;
            }
            c.judgments_[topic_id][doc_id] = relevance > 0;
        }
    }

    return c;
}

}  // namespace qdetect::corpus
