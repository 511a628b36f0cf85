#pragma once

#include <optional>
#include <string>

#include "socsen/cluster.hpp"
#include "socsen/record.hpp"

namespace socsen {

enum class TemporalRule : std::uint8_t {
    Meet,
    StartTogether,
    EndTogether,
    FullOverlap,
    PartialOverlap,
    Equal,
    WithinLambda,
};

enum class SpatialRule : std::uint8_t {
    SharedVantage,
    BoundaryTouch,
    WithinDelta,
};

const char* temporal_rule_name(TemporalRule r);
const char* spatial_rule_name(SpatialRule r);

/// Outcome of a pairwise composability check. Rules are reported by the
/// first match: temporal rules in their listed order, spatial rules with
/// the most specific (shared vantage) first.
struct ComposabilityVerdict {
    bool temporal{false};
    std::optional<TemporalRule> temporal_rule;
    bool spatial{false};
    std::optional<SpatialRule> spatial_rule;
    double overlap_t{0.0};
    double overlap_s{0.0};

    bool composable() const { return temporal && spatial; }
};

/// Composability thresholds. Delta/vartheta bound the spatial rules,
/// Lambda the temporal gap, theta the contextual relation between clusters.
struct ComposabilityThresholds {
    double delta_m{20.0};       // max geo-location difference
    double vartheta_deg{45.0};  // max direction/extent difference
    double lambda_s{900.0};     // max temporal gap
    double theta{0.5};          // contextual relation threshold
};

/// Temporal composability of two records: boundary touch (meet / start or
/// end together), overlap (full, partial, equal) or a gap within Lambda.
/// Symmetric in the two records.
std::pair<bool, std::optional<TemporalRule>> temporally_composable(const ServiceRecord& a,
                                                                   const ServiceRecord& b,
                                                                   double lambda_s);

/// Graded temporal overlap: dist_t / Lambda. 1 marks the edge of
/// acceptability, larger values are non-composable. Throws on Lambda == 0.
double overlap_t(const ServiceRecord& a, const ServiceRecord& b, double lambda_s);

/// Spatial composability: sector boundary touch, geo-location distance
/// within Delta, or a shared vantage point (same quadrant, close, similar
/// coverage). Symmetric.
std::pair<bool, std::optional<SpatialRule>> spatially_composable(const ServiceRecord& a,
                                                                 const ServiceRecord& b,
                                                                 double delta_m,
                                                                 double vartheta_deg);

/// Coverage-footprint intersection over union at the standard sector
/// discretization.
double overlap_s(const ServiceRecord& a, const ServiceRecord& b);

/// Full pairwise verdict.
ComposabilityVerdict assess_pair(const ServiceRecord& a, const ServiceRecord& b,
                                 const ComposabilityThresholds& th);

/// Two clusters compose when some pair of their members is both temporally
/// and spatially composable, or - for spatially distant context chains -
/// when some pair is temporally composable and the clusters' relation
/// reaches theta.
bool clusters_composable(const Cluster& x, const Cluster& y, const Corpus& corpus,
                         const ComposabilityThresholds& th);

}  // namespace socsen
