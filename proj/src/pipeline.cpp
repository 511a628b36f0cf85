#include "socsen/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "socsen/rtree.hpp"

namespace socsen {

EngineHandle make_engine(const EngineConfig& cfg) {
    EngineHandle h;
    if (!cfg.synonyms_path.empty()) h.dict = SynonymDict::load(cfg.synonyms_path);
    if (cfg.engine == EngineKind::Remote) {
        h.engine = std::make_unique<RemoteEngine>(cfg.remote_host, cfg.remote_port,
                                                  cfg.remote_path, cfg.remote_timeout_ms,
                                                  cfg.remote_retries);
    } else {
        h.engine = std::make_unique<LocalEngine>(h.dict);
    }
    return h;
}

void extract_contexts(Corpus& corpus, std::vector<Cluster>& clusters,
                      const SimilarityEngine& engine, double theta, const SynonymDict& dict) {
    for (auto& c : clusters) {
        // Trusted baseline: the union of the members' tags.
        std::set<std::string> baseline_set;
        for (const auto& id : c.member_ids)
            for (const auto& tag : corpus.at(corpus.index_of(id)).tags) {
                const std::string norm = normalize_term(tag);
                if (!norm.empty()) baseline_set.insert(norm);
            }
        const std::vector<std::string> baseline(baseline_set.begin(), baseline_set.end());

        std::vector<const ServiceRecord*> members;
        members.reserve(c.member_ids.size());
        for (const auto& id : c.member_ids) {
            const std::uint32_t idx = corpus.index_of(id);
            corpus.set_keywords(
                idx, extract_service_keywords(corpus.at(idx), baseline, engine, theta));
            members.push_back(&corpus.at(idx));
        }
        c.keyword_table = build_cluster_keywords(members, dict);
    }
}

namespace {

class StageClock {
public:
    explicit StageClock(std::vector<StageTiming>& out) : out_(out) {}
    template <typename F>
    auto run(const std::string& name, F&& f) {
        const auto start = std::chrono::steady_clock::now();
        if constexpr (std::is_void_v<decltype(f())>) {
            f();
            record(name, start);
        } else {
            auto result = f();
            record(name, start);
            return result;
        }
    }

private:
    void record(const std::string& name, std::chrono::steady_clock::time_point start) {
        const auto end = std::chrono::steady_clock::now();
        out_.push_back({name, std::chrono::duration<double, std::milli>(end - start).count()});
    }
    std::vector<StageTiming>& out_;
};

}  // namespace

std::vector<Cluster> run_clustering(Corpus& corpus, const EngineConfig& cfg,
                                    const SimilarityEngine& engine, const SynonymDict& dict) {
    const RTree3 index = build_index(corpus);
    auto clusters = cluster_corpus(corpus, index, cfg.delta_m, cfg.lambda_s);
    extract_contexts(corpus, clusters, engine, cfg.theta, dict);
    return clusters;
}

PipelineResult run_pipeline(Corpus& corpus, const Query& q, const EngineConfig& cfg,
                            const SimilarityEngine& engine, const SynonymDict& dict) {
    PipelineResult result;
    StageClock clock(result.timings);

    const RTree3 index = clock.run("index", [&] { return build_index(corpus); });
    result.clusters = clock.run("cluster", [&] {
        return cluster_corpus(corpus, index, cfg.delta_m, cfg.lambda_s);
    });
    clock.run("contexts", [&] {
        extract_contexts(corpus, result.clusters, engine, cfg.theta, dict);
    });
    result.recommendation = clock.run("recommend", [&] {
        return recommend(result.clusters, corpus, q, cfg.theta, cfg.top_n, cfg.br_margin,
                         cfg.search_window(q.window), engine, dict);
    });
    result.plan = clock.run("compose", [&] {
        return compose(result.recommendation, corpus, q, cfg, engine);
    });
    return result;
}

}  // namespace socsen
