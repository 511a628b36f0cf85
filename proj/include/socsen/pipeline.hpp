#pragma once

#include <memory>
#include <string>
#include <vector>

#include "socsen/compose.hpp"
#include "socsen/config.hpp"
#include "socsen/recommend.hpp"

namespace socsen {

struct StageTiming {
    std::string stage;
    double ms{0.0};
};

struct PipelineResult {
    std::vector<Cluster> clusters;
    RecommendationResult recommendation;
    CompositionPlan plan;
    std::vector<StageTiming> timings;
};

/// Similarity engine plus the synonym dictionary backing categorization.
struct EngineHandle {
    std::unique_ptr<SimilarityEngine> engine;
    SynonymDict dict;
};

EngineHandle make_engine(const EngineConfig& cfg);

/// Derives per-service keywords for every cluster member (the cluster
/// keyword baseline is the union of the members' tags) and builds the
/// cluster keyword tables. Mutates the corpus' derived keyword fields.
void extract_contexts(Corpus& corpus, std::vector<Cluster>& clusters,
                      const SimilarityEngine& engine, double theta, const SynonymDict& dict);

/// Index, cluster and annotate a corpus. Useful on its own for the
/// cluster-inspection CLI path.
std::vector<Cluster> run_clustering(Corpus& corpus, const EngineConfig& cfg,
                                    const SimilarityEngine& engine, const SynonymDict& dict);

/// Full composition pipeline:
/// index -> cluster -> extract contexts -> recommend -> compose.
PipelineResult run_pipeline(Corpus& corpus, const Query& q, const EngineConfig& cfg,
                            const SimilarityEngine& engine, const SynonymDict& dict);

}  // namespace socsen
