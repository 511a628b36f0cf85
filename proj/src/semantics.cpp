#include "socsen/semantics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include <httplib.h>
#include <nlohmann/json.hpp>

namespace socsen {

const char* keyword_category_name(KeywordCategory c) {
    switch (c) {
        case KeywordCategory::ObjectOfInterest: return "object_of_interest";
        case KeywordCategory::Landmark: return "landmark";
        case KeywordCategory::Behaviour: return "behaviour";
        case KeywordCategory::InteractingObject: return "interacting_object";
        case KeywordCategory::Uncategorized: return "uncategorized";
    }
    return "uncategorized";
}

std::optional<KeywordCategory> parse_keyword_category(const std::string& s) {
    if (s == "object_of_interest") return KeywordCategory::ObjectOfInterest;
    if (s == "landmark") return KeywordCategory::Landmark;
    if (s == "behaviour" || s == "behavior") return KeywordCategory::Behaviour;
    if (s == "interacting_object") return KeywordCategory::InteractingObject;
    if (s == "uncategorized") return KeywordCategory::Uncategorized;
    return std::nullopt;
}

namespace {

// Fixed in-repo stop-word list (lower case).
const std::unordered_set<std::string>& stop_words() {
    static const std::unordered_set<std::string> words = {
        "a",       "about",   "above",  "after",  "again",  "against", "all",    "along",
        "am",      "amid",    "among",
        "an",      "and",     "any",    "are",    "around", "as",      "at",     "be",
        "because", "behind",  "beside",
        "been",    "before",  "being",  "below",  "between","both",    "but",    "by",
        "can",     "could",   "did",    "do",     "does",   "doing",   "down",   "during",
        "each",    "few",     "for",    "from",   "further","had",     "has",    "have",
        "having",  "he",      "her",    "here",   "hers",   "him",     "his",    "how",
        "i",       "if",      "in",     "into",   "is",     "it",      "its",    "itself",
        "just",    "me",      "more",   "most",   "my",     "near",    "no",     "nor",
        "not",
        "now",     "of",      "off",    "on",     "once",   "only",    "onto",   "or",
        "other",
        "our",     "ours",    "out",    "over",   "own",    "same",    "she",    "should",
        "so",      "some",    "such",   "than",   "that",   "the",     "their",  "theirs",
        "them",    "then",    "there",  "these",  "they",   "this",    "those",  "through",
        "to",      "too",     "toward", "towards","under",  "until",   "up",     "upon",
        "very",    "was",     "we",
        "were",    "what",    "when",   "where",  "which",  "while",   "who",    "whom",
        "why",     "will",    "with",   "would",  "you",    "your",    "yours",
    };
    return words;
}

bool numeric_token(const std::string& t) {
    return std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::vector<std::string> token_set(const std::string& normalized) {
    std::vector<std::string> tokens;
    std::istringstream in(normalized);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    return tokens;
}

}  // namespace

std::string normalize_term(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    for (unsigned char c : s) {
        if (std::isalnum(c)) {
            if (pending_space && !out.empty()) out.push_back(' ');
            pending_space = false;
            out.push_back(static_cast<char>(std::tolower(c)));
        } else {
            pending_space = true;
        }
    }
    return out;
}

std::vector<std::vector<std::string>> content_runs(const std::string& text) {
    std::vector<std::vector<std::string>> runs;
    std::vector<std::string> cur;
    std::istringstream in(normalize_term(text));
    std::string tok;
    while (in >> tok) {
        if (stop_words().count(tok) || numeric_token(tok)) {
            if (!cur.empty()) runs.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(tok);
        }
    }
    if (!cur.empty()) runs.push_back(std::move(cur));
    return runs;
}

SynonymDict SynonymDict::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open synonym dictionary: " + path);
    SynonymDict dict;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string class_id, category, terms;
        if (!std::getline(ls, class_id, '\t') || !std::getline(ls, category, '\t') ||
            !std::getline(ls, terms)) {
            throw DataError("synonym dictionary line " + std::to_string(lineno) +
                            ": expected class_id<TAB>category<TAB>terms");
        }
        const auto cat = parse_keyword_category(category);
        if (!cat) {
            throw DataError("synonym dictionary line " + std::to_string(lineno) +
                            ": unknown category '" + category + "'");
        }
        std::vector<std::string> term_list;
        std::istringstream ts(terms);
        std::string term;
        while (std::getline(ts, term, '|')) {
            const std::string norm = normalize_term(term);
            if (!norm.empty()) term_list.push_back(norm);
        }
        if (term_list.empty()) {
            throw DataError("synonym dictionary line " + std::to_string(lineno) +
                            ": class without terms");
        }
        dict.add_class(class_id, *cat, term_list);
    }
    return dict;
}

void SynonymDict::add_class(const std::string& class_id, KeywordCategory cat,
                            const std::vector<std::string>& terms) {
    classes_.push_back({class_id, cat});
    const std::size_t idx = classes_.size() - 1;
    for (const auto& t : terms) term_to_class_.emplace(normalize_term(t), idx);
}

bool SynonymDict::same_class(const std::string& a, const std::string& b) const {
    const auto ia = term_to_class_.find(normalize_term(a));
    if (ia == term_to_class_.end()) return false;
    const auto ib = term_to_class_.find(normalize_term(b));
    return ib != term_to_class_.end() && ia->second == ib->second;
}

KeywordCategory SynonymDict::category_of(const std::string& term) const {
    const auto it = term_to_class_.find(normalize_term(term));
    if (it == term_to_class_.end()) return KeywordCategory::Uncategorized;
    return classes_[it->second].category;
}

bool SynonymDict::has(const std::string& term) const {
    return term_to_class_.count(normalize_term(term)) != 0;
}

double LocalEngine::term_sim(const std::string& a, const std::string& b) const {
    const std::string na = normalize_term(a);
    const std::string nb = normalize_term(b);
    if (na == nb) return 1.0;
    const auto ta = token_set(na);
    const auto tb = token_set(nb);
    double jaccard = 0.0;
    if (!ta.empty() && !tb.empty()) {
        std::vector<std::string> inter;
        std::set_intersection(ta.begin(), ta.end(), tb.begin(), tb.end(),
                              std::back_inserter(inter));
        const double uni = static_cast<double>(ta.size() + tb.size() - inter.size());
        jaccard = static_cast<double>(inter.size()) / uni;
    }
    if (dict_.same_class(na, nb)) jaccard = std::max(jaccard, 0.8);
    return std::clamp(jaccard, 0.0, 1.0);
}

double LocalEngine::text_sim(const std::string& text,
                             const std::vector<std::string>& phrases) const {
    double best = 0.0;
    for (const auto& p : phrases) best = std::max(best, term_sim(text, p));
    return best;
}

RemoteEngine::RemoteEngine(std::string host, int port, std::string path, int timeout_ms,
                           int retries)
    : host_(std::move(host)), port_(port), path_(std::move(path)),
      timeout_ms_(timeout_ms), retries_(retries) {}

double RemoteEngine::term_sim(const std::string& a, const std::string& b) const {
    if (a == b) return 1.0;
    // Canonical argument order keeps the reported score symmetric even if
    // the remote service is not.
    const std::string& lo = std::min(a, b);
    const std::string& hi = std::max(a, b);
    nlohmann::json body = {{"text_a", lo}, {"text_b", hi}};
    const std::string payload = body.dump();

    std::string last_error = "no attempt made";
    for (int attempt = 0; attempt <= retries_; ++attempt) {
        httplib::Client client(host_, port_);
        client.set_connection_timeout(0, timeout_ms_ * 1000);
        client.set_read_timeout(0, timeout_ms_ * 1000);
        client.set_write_timeout(0, timeout_ms_ * 1000);
        auto res = client.Post(path_, payload, "application/json");
        if (!res) {
            last_error = "transport error: " + httplib::to_string(res.error());
            continue;
        }
        if (res->status != 200) {
            last_error = "HTTP status " + std::to_string(res->status);
            continue;
        }
        try {
            const auto parsed = nlohmann::json::parse(res->body);
            const double sim = parsed.at("similarity").get<double>();
            return std::clamp(sim, 0.0, 1.0);
        } catch (const std::exception& e) {
            last_error = std::string("bad response body: ") + e.what();
        }
    }
    throw DataError("remote similarity request failed after " +
                    std::to_string(retries_ + 1) + " attempts: " + last_error);
}

double RemoteEngine::text_sim(const std::string& text,
                              const std::vector<std::string>& phrases) const {
    double best = 0.0;
    for (const auto& p : phrases) best = std::max(best, term_sim(text, p));
    return best;
}

std::vector<std::string> extract_snippets(const std::string& description,
                                          const SimilarityEngine& /*engine*/) {
    std::vector<std::string> out;
    std::unordered_set<std::string> seen;
    for (const auto& run : content_runs(description)) {
        for (std::size_t n = 1; n <= 3; ++n) {
            if (run.size() < n) break;
            for (std::size_t i = 0; i + n <= run.size(); ++i) {
                std::string gram = run[i];
                for (std::size_t k = 1; k < n; ++k) gram += " " + run[i + k];
                if (seen.insert(gram).second) out.push_back(std::move(gram));
            }
        }
    }
    return out;
}

std::vector<std::string> extract_service_keywords(const ServiceRecord& r,
                                                  const std::vector<std::string>& cluster_kw,
                                                  const SimilarityEngine& engine, double theta) {
    std::vector<std::string> out;
    std::unordered_set<std::string> seen;
    for (const auto& tag : r.tags) {
        const std::string norm = normalize_term(tag);
        if (!norm.empty() && seen.insert(norm).second) out.push_back(norm);
    }
    const auto snippets = extract_snippets(r.description, engine);
    for (const auto& snip : snippets) {
        if (seen.count(snip)) continue;
        bool keep = false;
        for (const auto& tag : out) {
            if (engine.term_sim(snip, tag) >= theta) {
                keep = true;
                break;
            }
        }
        if (!keep) {
            for (const auto& kw : cluster_kw) {
                if (engine.term_sim(snip, kw) >= theta) {
                    keep = true;
                    break;
                }
            }
        }
        if (keep && seen.insert(snip).second) out.push_back(snip);
    }
    return out;
}

std::vector<KeywordEntry> build_cluster_keywords(
    const std::vector<const ServiceRecord*>& members, const SynonymDict& dict) {
    std::map<std::string, int> freq;
    for (const ServiceRecord* m : members) {
        std::set<std::string> unique(m->keywords.begin(), m->keywords.end());
        for (const auto& term : unique) ++freq[term];
    }
    int total = 0;
    for (const auto& [term, f] : freq) total += f;

    std::vector<KeywordEntry> table;
    table.reserve(freq.size());
    for (const auto& [term, f] : freq) {
        KeywordEntry e;
        e.term = term;
        e.category = dict.category_of(term);
        e.freq = f;
        e.rel_freq = total > 0 ? static_cast<double>(f) / total : 0.0;
        table.push_back(std::move(e));
    }
    std::sort(table.begin(), table.end(), [](const KeywordEntry& a, const KeywordEntry& b) {
        if (a.rel_freq != b.rel_freq) return a.rel_freq > b.rel_freq;
        return a.term < b.term;
    });
    return table;
}

std::vector<KeywordEntry> score_keywords_vs_query(std::vector<KeywordEntry> table,
                                                  const Query& q,
                                                  const SimilarityEngine& engine,
                                                  const SynonymDict& dict) {
    for (auto& e : table) {
        double sim = 0.0;
        for (const auto& p : q.phrases) sim = std::max(sim, engine.term_sim(e.term, p));

        double cat_match = 0.0;
        bool exact_or_synonym = false;
        for (const auto& p : q.phrases) {
            if (normalize_term(p) == e.term || dict.same_class(p, e.term)) {
                exact_or_synonym = true;
                break;
            }
        }
        if (exact_or_synonym) {
            cat_match = 1.0;
        } else if (e.category != KeywordCategory::Uncategorized) {
            for (const auto& p : q.phrases) {
                if (dict.category_of(p) == e.category)
                    cat_match = std::max(cat_match, engine.term_sim(e.term, p));
            }
        }
        e.scored = true;
        e.category_match = cat_match;
        e.similarity = sim;
    }
    return table;
}

}  // namespace socsen
