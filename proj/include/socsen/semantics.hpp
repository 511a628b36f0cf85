#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "socsen/record.hpp"

namespace socsen {

/// Keyword categories of the cluster context tables. Assigned from the
/// synonym dictionary's annotations; terms the dictionary does not know
/// stay uncategorized.
enum class KeywordCategory : std::uint8_t {
    ObjectOfInterest,
    Landmark,
    Behaviour,
    InteractingObject,
    Uncategorized,
};

const char* keyword_category_name(KeywordCategory c);
std::optional<KeywordCategory> parse_keyword_category(const std::string& s);

/// One row of a cluster keyword table.
struct KeywordEntry {
    std::string term;
    KeywordCategory category{KeywordCategory::Uncategorized};
    int freq{0};           // number of member services carrying the term
    double rel_freq{0.0};  // freq / total freq mass of the table
    bool scored{false};    // query_score fields valid only when true
    double category_match{0.0};
    double similarity{0.0};
};

/// Lower-case, strip punctuation, collapse whitespace.
std::string normalize_term(const std::string& s);

/// Normalized tokens of a text, stop words removed, grouped into the
/// contiguous runs they came from (n-grams never bridge a removed word).
std::vector<std::vector<std::string>> content_runs(const std::string& text);

/// Domain-expert vocabulary: synonym classes with category annotations.
/// File format: one class per line, `class_id<TAB>category<TAB>term1|term2|...`,
/// UTF-8, `#` starts a comment line.
class SynonymDict {
public:
    SynonymDict() = default;
    static SynonymDict load(const std::string& path);

    void add_class(const std::string& class_id, KeywordCategory cat,
                   const std::vector<std::string>& terms);

    bool same_class(const std::string& a, const std::string& b) const;
    KeywordCategory category_of(const std::string& term) const;
    bool has(const std::string& term) const;
    std::size_t class_count() const { return classes_.size(); }

private:
    struct Class {
        std::string id;
        KeywordCategory category;
    };
    std::map<std::string, std::size_t> term_to_class_;  // normalized term -> index
    std::vector<Class> classes_;
};

/// Pluggable text-relatedness provider. Implementations must keep term_sim
/// symmetric, term_sim(a,a) == 1 and every output within [0,1].
class SimilarityEngine {
public:
    virtual ~SimilarityEngine() = default;
    virtual double term_sim(const std::string& a, const std::string& b) const = 0;
    virtual double text_sim(const std::string& text,
                            const std::vector<std::string>& phrases) const = 0;
};

/// Deterministic offline engine: token-set Jaccard, raised to at least 0.8
/// when the two terms share a synonym class.
class LocalEngine : public SimilarityEngine {
public:
    LocalEngine() = default;
    explicit LocalEngine(SynonymDict dict) : dict_(std::move(dict)) {}

    double term_sim(const std::string& a, const std::string& b) const override;
    double text_sim(const std::string& text,
                    const std::vector<std::string>& phrases) const override;

    const SynonymDict& dict() const { return dict_; }

private:
    SynonymDict dict_;
};

/// Client for an external text-comparison service.
/// POSTs `{"text_a":..., "text_b":...}` and expects `{"similarity": s}`.
/// Inputs are ordered canonically before sending so the result is symmetric
/// regardless of the server. Fails with DataError after the configured
/// retries; never hangs beyond the per-request timeout.
class RemoteEngine : public SimilarityEngine {
public:
    RemoteEngine(std::string host, int port, std::string path = "/similarity",
                 int timeout_ms = 2000, int retries = 2);

    double term_sim(const std::string& a, const std::string& b) const override;
    double text_sim(const std::string& text,
                    const std::vector<std::string>& phrases) const override;

private:
    std::string host_;
    int port_;
    std::string path_;
    int timeout_ms_;
    int retries_;
};

/// Candidate key-phrases of a description: 1-3 token n-grams over the
/// normalized content runs, first-appearance order, duplicates removed.
std::vector<std::string> extract_snippets(const std::string& description,
                                          const SimilarityEngine& engine);

/// Service keywords: all tags, plus description snippets that reach `theta`
/// similarity against a tag or an existing cluster keyword. Tags come first
/// (they are the trusted source); order is deterministic.
std::vector<std::string> extract_service_keywords(const ServiceRecord& r,
                                                  const std::vector<std::string>& cluster_kw,
                                                  const SimilarityEngine& engine, double theta);

/// Keyword table over member services: freq counts services carrying the
/// term, rel_freq normalizes by the table's total frequency mass. Sorted by
/// rel_freq descending, ties lexicographic.
std::vector<KeywordEntry> build_cluster_keywords(
    const std::vector<const ServiceRecord*>& members, const SynonymDict& dict);

/// Annotates each entry with its (category-match, similarity) query score.
std::vector<KeywordEntry> score_keywords_vs_query(std::vector<KeywordEntry> table,
                                                  const Query& q,
                                                  const SimilarityEngine& engine,
                                                  const SynonymDict& dict);

}  // namespace socsen
