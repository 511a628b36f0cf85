#pragma once

#include <span>
#include <utility>
#include <vector>

#include "socsen/cluster.hpp"
#include "socsen/record.hpp"
#include "socsen/semantics.hpp"

namespace socsen {

/// Outcome of the recommendation stage: the primary set S' of clusters
/// intersecting the bounded region with matching context, and the extension
/// set S+ of temporally close, semantically related clusters.
struct RecommendationResult {
    std::vector<Cluster> primary;                       // S'
    std::vector<std::pair<Cluster, double>> related;    // S+ with relation score
    Mbr3 bounded_region;                                // BR
    double theta{0.0};
    TimeInterval search_window;                         // (t_1, t_2)
    std::size_t pruned_records{0};
    std::size_t candidate_clusters{0};
};

/// Query rectangle scaled by `margin` per side (1.0 keeps the exact box),
/// spanning the query time window, in projected coordinates about `origin`.
Mbr3 bounded_region(const Query& q, GeoPoint origin, double margin);

/// Clusters whose footprint/time touch BR and whose top-n keywords reach
/// `theta` against the query phrases (aggregate = best keyword/phrase pair).
/// The directionless quarantine cluster never qualifies.
std::vector<Cluster> filter_clusters(const std::vector<Cluster>& clusters, const Corpus& corpus,
                                     const Query& q, const Mbr3& br, double theta, int top_n,
                                     const SimilarityEngine& engine);

/// Drops members whose best keyword-to-phrase similarity is <= theta
/// (keywords listed among the record's own noise terms do not count) and
/// rebuilds the keyword table from the survivors. May return an empty
/// cluster; the caller drops those from S'.
Cluster prune_services(Cluster c, const Corpus& corpus, const Query& q, double theta,
                       const SimilarityEngine& engine, const SynonymDict& dict);

/// Weighted frequency of keyword-set similarity: combined frequency mass of
/// the shared terms over the mass of the union. Symmetric, in [0,1].
double s_sim(const Cluster& x, const Cluster& y);

/// Number of keyword terms the two tables share.
int shared_keyword_count(const Cluster& x, const Cluster& y);

/// Welch's two-sample t statistic with sample (N-1) variances. Returns 0
/// when both variances vanish with equal means, +/-inf when they vanish
/// with distinct means.
double welch_t(std::span<const double> a, std::span<const double> b);

/// Welch's t over the clusters' member times (interval midpoints, seconds
/// relative to the earlier cluster's start). Throws DataError on an empty
/// cluster.
double t_sim(const Cluster& x, const Cluster& y, const Corpus& corpus);

/// Temporal-semantic relation: shared keyword count over |t_sim|, clamped
/// to [0,1]; |t| below 1 counts as 1 so perfect temporal alignment never
/// divides by zero. Zero when nothing is shared or |t| is infinite.
double relation(const Cluster& x, const Cluster& y, const Corpus& corpus);

/// For every primary cluster, scans all clusters within the search window
/// for semantic matches (top-n keywords vs the primary's table at theta)
/// and collects them with their relation scores. Clusters already in S'
/// are skipped; duplicates keep their best score; sorted by relation
/// descending, ties by cluster id.
std::vector<std::pair<Cluster, double>> related_clusters(
    const std::vector<Cluster>& primary, const std::vector<Cluster>& all_clusters,
    const Corpus& corpus, TimeInterval window, double theta, int top_n,
    const SimilarityEngine& engine);

/// Full Algorithm-2 pass: filter, prune (dropping emptied clusters), then
/// extend with related clusters.
RecommendationResult recommend(const std::vector<Cluster>& clusters, const Corpus& corpus,
                               const Query& q, double theta, int top_n, double br_margin,
                               TimeInterval search_window, const SimilarityEngine& engine,
                               const SynonymDict& dict);

}  // namespace socsen
