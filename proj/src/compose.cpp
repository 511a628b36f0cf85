#include "socsen/compose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

namespace socsen {

namespace {

std::set<std::string> noise_set(const ServiceRecord& r) {
    std::set<std::string> noise;
    for (const auto& n : r.quality.noise_terms) noise.insert(normalize_term(n));
    return noise;
}

double record_query_score(const ServiceRecord& r, const Query& q,
                          const SimilarityEngine& engine) {
    const auto noise = noise_set(r);
    double best = 0.0;
    for (const auto& kw : r.keywords) {
        if (noise.count(kw)) continue;
        for (const auto& p : q.phrases) best = std::max(best, engine.term_sim(kw, p));
    }
    return best;
}

bool noise_collides_with_query(const ServiceRecord& r, const Query& q,
                               const SimilarityEngine& engine, double theta) {
    for (const auto& n : r.quality.noise_terms)
        for (const auto& p : q.phrases)
            if (engine.term_sim(n, p) >= theta) return true;
    return false;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool spans_mergeable(const TimeInterval& a, const TimeInterval& b) {
    // Merge on >= 1 s of genuine overlap; identical spans (the single-stamp
    // cluster case) always merge.
    if (a == b) return true;
    const std::int64_t overlap = std::min(a.t_e, b.t_e) - std::max(a.t_s, b.t_s);
    return overlap >= 1;
}

}  // namespace

std::vector<std::string> select_representatives(const Cluster& c, const Corpus& corpus,
                                                const Query& q, int max_k,
                                                const SimilarityEngine& engine, double theta) {
    struct Ranked {
        std::string id;
        double score;
        std::int64_t pixels;
        bool demoted;
    };
    std::vector<Ranked> ranked;
    ranked.reserve(c.member_ids.size());
    for (const auto& id : c.member_ids) {
        const auto& r = corpus.at(corpus.index_of(id));
        ranked.push_back({id, record_query_score(r, q, engine), r.quality.pixels(),
                          noise_collides_with_query(r, q, engine, theta)});
    }
    std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
        if (a.demoted != b.demoted) return !a.demoted;
        if (a.score != b.score) return a.score > b.score;
        if (a.pixels != b.pixels) return a.pixels > b.pixels;
        return a.id < b.id;
    });
    std::vector<std::string> out;
    const std::size_t cap = max_k > 0 ? static_cast<std::size_t>(max_k) : ranked.size();
    for (const auto& r : ranked) {
        if (out.size() >= cap) break;
        out.push_back(r.id);
    }
    return out;
}

CompositionPlan compose(const RecommendationResult& rec, const Corpus& corpus, const Query& q,
                        const EngineConfig& cfg, const SimilarityEngine& engine) {
    CompositionPlan plan;
    plan.query = q;
    plan.stats.corpus_records = corpus.size();
    plan.stats.candidate_clusters = rec.candidate_clusters;
    plan.stats.primary_clusters = rec.primary.size();
    plan.stats.related_clusters = rec.related.size();
    plan.stats.pruned_records = rec.pruned_records;
    for (const auto& [c, score] : rec.related) plan.related_context.emplace_back(c.id, score);

    std::vector<const Cluster*> nodes;
    for (const auto& c : rec.primary) nodes.push_back(&c);
    for (const auto& [c, score] : rec.related) nodes.push_back(&c);
    for (const Cluster* c : nodes) plan.stats.candidate_records += c->member_ids.size();
    if (nodes.empty()) return plan;

    const ComposabilityThresholds th{cfg.Delta_m, cfg.vartheta_deg, cfg.Lambda_s, cfg.theta};
    UnionFind uf(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (clusters_composable(*nodes[i], *nodes[j], corpus, th)) uf.unite(static_cast<int>(i), static_cast<int>(j));

    // Keep the components that touch the bounded region.
    std::set<int> kept_roots;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (cluster_intersects(*nodes[i], corpus, rec.bounded_region))
            kept_roots.insert(uf.find(static_cast<int>(i)));

    std::vector<const Cluster*> surviving;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (kept_roots.count(uf.find(static_cast<int>(i)))) surviving.push_back(nodes[i]);
    plan.stats.composed_clusters = surviving.size();
    if (surviving.empty()) return plan;

    std::sort(surviving.begin(), surviving.end(), [](const Cluster* a, const Cluster* b) {
        if (a->time_span.t_s != b->time_span.t_s) return a->time_span.t_s < b->time_span.t_s;
        return a->id < b->id;
    });

    // Sweep the time-ordered clusters into frames, merging overlapping spans.
    std::vector<std::vector<const Cluster*>> groups;
    TimeInterval running{};
    for (const Cluster* c : surviving) {
        if (!groups.empty() && spans_mergeable(running, c->time_span)) {
            groups.back().push_back(c);
            running.t_s = std::min(running.t_s, c->time_span.t_s);
            running.t_e = std::max(running.t_e, c->time_span.t_e);
        } else {
            groups.push_back({c});
            running = c->time_span;
        }
    }

    const int g = cfg.grid_g;
    for (const auto& group : groups) {
        Frame frame;
        frame.grid_g = g;
        frame.time_label = group.front()->time_span;

        struct Pick {
            std::string id;
            Vec2 xy;
            double score;
        };
        std::vector<Pick> picks;
        for (const Cluster* c : group) {
            frame.cluster_ids.push_back(c->id);
            frame.time_label.t_s = std::min(frame.time_label.t_s, c->time_span.t_s);
            frame.time_label.t_e = std::max(frame.time_label.t_e, c->time_span.t_e);
            for (const auto& id :
                 select_representatives(*c, corpus, q, cfg.select_cap(), engine, cfg.theta)) {
                const auto& r = corpus.at(corpus.index_of(id));
                picks.push_back({id, r.xy, record_query_score(r, q, engine)});
            }
            int taken = 0;
            for (const auto& e : c->keyword_table) {
                if (taken >= 3) break;
                if (std::find(frame.caption.begin(), frame.caption.end(), e.term) ==
                    frame.caption.end()) {
                    frame.caption.push_back(e.term);
                    ++taken;
                }
            }
        }

        double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
        double y_min = x_min, y_max = -x_min;
        for (const auto& p : picks) {
            x_min = std::min(x_min, p.xy.x);
            x_max = std::max(x_max, p.xy.x);
            y_min = std::min(y_min, p.xy.y);
            y_max = std::max(y_max, p.xy.y);
        }
        const double w = x_max - x_min;
        const double h = y_max - y_min;

        std::vector<bool> occupied(static_cast<std::size_t>(g) * g, false);
        for (const auto& p : picks) {
            int col = w > 0.0 ? static_cast<int>((p.xy.x - x_min) / w * g) : 0;
            int row = h > 0.0 ? static_cast<int>((y_max - p.xy.y) / h * g) : 0;
            col = std::clamp(col, 0, g - 1);
            row = std::clamp(row, 0, g - 1);
            int cell = row * g + col;
            int probes = 0;
            while (occupied[cell] && probes < g * g) {
                cell = (cell + 1) % (g * g);  // next free cell, row-major with wrap
                ++probes;
            }
            if (occupied[cell]) {
                frame.overflow_record_ids.push_back(p.id);
                continue;
            }
            occupied[cell] = true;
            const auto& r = corpus.at(corpus.index_of(p.id));
            frame.cells.push_back({cell / g, cell % g, p.id, r.time, p.score});
            ++plan.stats.selected_records;
        }
        std::sort(frame.cells.begin(), frame.cells.end(), [g](const FrameCell& a, const FrameCell& b) {
            return a.row * g + a.col < b.row * g + b.col;
        });
        plan.frames.push_back(std::move(frame));
    }
    return plan;
}

}  // namespace socsen
