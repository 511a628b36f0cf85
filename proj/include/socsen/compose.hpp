#pragma once

#include <string>
#include <vector>

#include "socsen/composability.hpp"
#include "socsen/config.hpp"
#include "socsen/recommend.hpp"

namespace socsen {

/// One occupied cell of a tapestry frame grid.
struct FrameCell {
    int row{0};
    int col{0};
    std::string record_id;
    TimeInterval time;
    double score{0.0};  // best keyword-to-phrase similarity of the record
};

/// A time slot of the storyboard: one or more merged clusters laid out on a
/// g x g grid. Rows run north to south, columns west to east.
struct Frame {
    TimeInterval time_label;
    std::vector<int> cluster_ids;
    int grid_g{3};
    std::vector<FrameCell> cells;
    std::vector<std::string> overflow_record_ids;  // beyond grid capacity
    std::vector<std::string> caption;              // top keywords of the clusters
};

struct PlanStats {
    std::size_t corpus_records{0};
    std::size_t candidate_clusters{0};
    std::size_t primary_clusters{0};
    std::size_t related_clusters{0};
    std::size_t composed_clusters{0};
    std::size_t candidate_records{0};
    std::size_t selected_records{0};
    std::size_t pruned_records{0};
};

/// The tapestry: a time-ordered storyboard of frames plus provenance.
struct CompositionPlan {
    Query query;
    std::vector<Frame> frames;
    std::vector<std::pair<int, double>> related_context;  // (cluster id, relation)
    PlanStats stats;
};

/// Members of a pruned cluster ranked for display: best query similarity
/// first, ties broken by resolution then id; members whose own noise terms
/// collide with the query go last. At most max_k survive.
std::vector<std::string> select_representatives(const Cluster& c, const Corpus& corpus,
                                                const Query& q, int max_k,
                                                const SimilarityEngine& engine, double theta);

/// Assembles the tapestry from a recommendation:
/// builds the composability graph over S' and S+, keeps the components
/// touching the bounded region, orders clusters by time-span start, merges
/// overlapping spans into frames and fills each frame grid by projected
/// location. Deterministic for identical inputs.
CompositionPlan compose(const RecommendationResult& rec, const Corpus& corpus, const Query& q,
                        const EngineConfig& cfg, const SimilarityEngine& engine);

}  // namespace socsen
