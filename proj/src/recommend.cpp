#include "socsen/recommend.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

namespace socsen {

Mbr3 bounded_region(const Query& q, GeoPoint origin, double margin) {
    const Vec2 c = project(q.region.center, origin);
    const double hx = q.region.l_m * margin;
    const double hy = q.region.w_m * margin;
    return {c.x - hx, c.x + hx, c.y - hy, c.y + hy,
            static_cast<double>(q.window.t_s), static_cast<double>(q.window.t_e)};
}

namespace {

double best_pair_sim(const std::vector<KeywordEntry>& table, int top_n,
                     const std::vector<std::string>& phrases, const SimilarityEngine& engine) {
    double best = 0.0;
    const int n = std::min<int>(top_n, static_cast<int>(table.size()));
    for (int i = 0; i < n; ++i)
        for (const auto& p : phrases) best = std::max(best, engine.term_sim(table[i].term, p));
    return best;
}

double best_member_sim(const ServiceRecord& r, const std::vector<std::string>& phrases,
                       const SimilarityEngine& engine) {
    std::set<std::string> noise;
    for (const auto& n : r.quality.noise_terms) noise.insert(normalize_term(n));
    double best = 0.0;
    for (const auto& kw : r.keywords) {
        if (noise.count(kw)) continue;  // obstructions never argue for relevance
        for (const auto& p : phrases) best = std::max(best, engine.term_sim(kw, p));
    }
    return best;
}

}  // namespace

std::vector<Cluster> filter_clusters(const std::vector<Cluster>& clusters, const Corpus& corpus,
                                     const Query& q, const Mbr3& br, double theta, int top_n,
                                     const SimilarityEngine& engine) {
    std::vector<Cluster> out;
    for (const auto& c : clusters) {
        if (c.directionless || c.member_ids.empty()) continue;
        if (!cluster_intersects(c, corpus, br)) continue;
        if (best_pair_sim(c.keyword_table, top_n, q.phrases, engine) >= theta)
            out.push_back(c);
    }
    return out;
}

Cluster prune_services(Cluster c, const Corpus& corpus, const Query& q, double theta,
                       const SimilarityEngine& engine, const SynonymDict& dict) {
    std::vector<std::string> kept;
    kept.reserve(c.member_ids.size());
    for (const auto& id : c.member_ids) {
        const auto& r = corpus.at(corpus.index_of(id));
        if (best_member_sim(r, q.phrases, engine) > theta) kept.push_back(id);
    }
    if (kept.size() == c.member_ids.size()) return c;

    c.member_ids = std::move(kept);
    if (c.member_ids.empty()) {
        c.keyword_table.clear();
        return c;
    }
    if (!c.contains(c.seed_id)) c.seed_id = c.member_ids.front();
    std::vector<const ServiceRecord*> members;
    members.reserve(c.member_ids.size());
    c.time_span = corpus.at(corpus.index_of(c.member_ids.front())).time;
    for (const auto& id : c.member_ids) {
        const auto& r = corpus.at(corpus.index_of(id));
        members.push_back(&r);
        c.time_span.t_s = std::min(c.time_span.t_s, r.time.t_s);
        c.time_span.t_e = std::max(c.time_span.t_e, r.time.t_e);
    }
    c.keyword_table = build_cluster_keywords(members, dict);
    return c;
}

double s_sim(const Cluster& x, const Cluster& y) {
    std::map<std::string, int> fx, fy;
    for (const auto& e : x.keyword_table) fx[e.term] = e.freq;
    for (const auto& e : y.keyword_table) fy[e.term] = e.freq;
    double shared = 0.0, total = 0.0;
    for (const auto& [term, f] : fx) {
        const auto it = fy.find(term);
        const int combined = f + (it != fy.end() ? it->second : 0);
        total += combined;
        if (it != fy.end()) shared += combined;
    }
    for (const auto& [term, f] : fy)
        if (!fx.count(term)) total += f;
    if (total <= 0.0) return 0.0;
    return std::clamp(shared / total, 0.0, 1.0);
}

int shared_keyword_count(const Cluster& x, const Cluster& y) {
    std::set<std::string> tx;
    for (const auto& e : x.keyword_table) tx.insert(e.term);
    int n = 0;
    std::set<std::string> seen;
    for (const auto& e : y.keyword_table)
        if (tx.count(e.term) && seen.insert(e.term).second) ++n;
    return n;
}

double welch_t(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw DataError("welch_t: empty sample");
    auto stats = [](std::span<const double> s) {
        double mean = 0.0;
        for (double v : s) mean += v;
        mean /= static_cast<double>(s.size());
        double var = 0.0;
        if (s.size() > 1) {
            for (double v : s) var += (v - mean) * (v - mean);
            var /= static_cast<double>(s.size() - 1);
        }
        return std::pair{mean, var};
    };
    const auto [m1, v1] = stats(a);
    const auto [m2, v2] = stats(b);
    const double denom = std::sqrt(v1 / static_cast<double>(a.size()) +
                                   v2 / static_cast<double>(b.size()));
    const double diff = m1 - m2;
    if (denom == 0.0) {
        if (diff == 0.0) return 0.0;
        return std::copysign(std::numeric_limits<double>::infinity(), diff);
    }
    return diff / denom;
}

namespace {

std::vector<double> member_times(const Cluster& c, const Corpus& corpus, double offset) {
    std::vector<double> t;
    t.reserve(c.member_ids.size());
    for (const auto& id : c.member_ids)
        t.push_back(corpus.at(corpus.index_of(id)).time.midpoint() - offset);
    return t;
}

double earliest_member_time(const Cluster& c, const Corpus& corpus) {
    double lo = std::numeric_limits<double>::infinity();
    for (const auto& id : c.member_ids)
        lo = std::min(lo, corpus.at(corpus.index_of(id)).time.midpoint());
    return lo;
}

}  // namespace

double t_sim(const Cluster& x, const Cluster& y, const Corpus& corpus) {
    if (x.member_ids.empty() || y.member_ids.empty())
        throw DataError("t_sim: empty cluster");
    const double offset = std::min(earliest_member_time(x, corpus),
                                   earliest_member_time(y, corpus));
    const auto tx = member_times(x, corpus, offset);
    const auto ty = member_times(y, corpus, offset);
    return welch_t(tx, ty);
}

double relation(const Cluster& x, const Cluster& y, const Corpus& corpus) {
    const int shared = shared_keyword_count(x, y);
    if (shared == 0) return 0.0;
    const double t = std::abs(t_sim(x, y, corpus));
    if (std::isinf(t)) return 0.0;
    return std::clamp(static_cast<double>(shared) / std::max(t, 1.0), 0.0, 1.0);
}

std::vector<std::pair<Cluster, double>> related_clusters(
    const std::vector<Cluster>& primary, const std::vector<Cluster>& all_clusters,
    const Corpus& corpus, TimeInterval window, double theta, int top_n,
    const SimilarityEngine& engine) {
    std::set<int> primary_ids;
    for (const auto& p : primary) primary_ids.insert(p.id);

    std::map<int, std::pair<const Cluster*, double>> best;  // cluster id -> best relation
    for (const auto& p : primary) {
        for (const auto& cand : all_clusters) {
            if (cand.directionless || cand.member_ids.empty()) continue;
            if (primary_ids.count(cand.id)) continue;
            if (cand.time_span.t_e < window.t_s || cand.time_span.t_s > window.t_e) continue;

            std::vector<std::string> primary_terms;
            primary_terms.reserve(p.keyword_table.size());
            for (const auto& e : p.keyword_table) primary_terms.push_back(e.term);
            double sim = 0.0;
            const int n = std::min<int>(top_n, static_cast<int>(cand.keyword_table.size()));
            for (int i = 0; i < n && sim < theta; ++i)
                for (const auto& term : primary_terms)
                    sim = std::max(sim, engine.term_sim(cand.keyword_table[i].term, term));
            if (sim < theta) continue;

            const double rel = relation(p, cand, corpus);
            auto it = best.find(cand.id);
            if (it == best.end() || rel > it->second.second)
                best[cand.id] = {&cand, rel};
        }
    }

    std::vector<std::pair<Cluster, double>> out;
    out.reserve(best.size());
    for (const auto& [id, entry] : best) out.emplace_back(*entry.first, entry.second);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first.id < b.first.id;
    });
    return out;
}

RecommendationResult recommend(const std::vector<Cluster>& clusters, const Corpus& corpus,
                               const Query& q, double theta, int top_n, double br_margin,
                               TimeInterval search_window, const SimilarityEngine& engine,
                               const SynonymDict& dict) {
    RecommendationResult res;
    res.theta = theta;
    res.search_window = search_window;
    res.bounded_region = bounded_region(q, corpus.origin(), br_margin);
    res.candidate_clusters = clusters.size();

    auto primary = filter_clusters(clusters, corpus, q, res.bounded_region, theta, top_n, engine);
    for (auto& c : primary) {
        const std::size_t before = c.member_ids.size();
        Cluster pruned = prune_services(std::move(c), corpus, q, theta, engine, dict);
        res.pruned_records += before - pruned.member_ids.size();
        if (!pruned.member_ids.empty()) res.primary.push_back(std::move(pruned));
    }
    res.related = related_clusters(res.primary, clusters, corpus, search_window, theta, top_n,
                                   engine);
    return res;
}

}  // namespace socsen
