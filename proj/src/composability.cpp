#include "socsen/composability.hpp"

#include <algorithm>
#include <cmath>

#include "socsen/recommend.hpp"
#include "socsen/sector.hpp"

namespace socsen {

const char* temporal_rule_name(TemporalRule r) {
    switch (r) {
        case TemporalRule::Meet: return "meet";
        case TemporalRule::StartTogether: return "start_together";
        case TemporalRule::EndTogether: return "end_together";
        case TemporalRule::FullOverlap: return "full_overlap";
        case TemporalRule::PartialOverlap: return "partial_overlap";
        case TemporalRule::Equal: return "equal";
        case TemporalRule::WithinLambda: return "within_lambda";
    }
    return "?";
}

const char* spatial_rule_name(SpatialRule r) {
    switch (r) {
        case SpatialRule::SharedVantage: return "shared_vantage";
        case SpatialRule::BoundaryTouch: return "boundary_touch";
        case SpatialRule::WithinDelta: return "within_delta";
    }
    return "?";
}

std::pair<bool, std::optional<TemporalRule>> temporally_composable(const ServiceRecord& a,
                                                                   const ServiceRecord& b,
                                                                   double lambda_s) {
    const TimeInterval& p = a.time;
    const TimeInterval& q = b.time;
    if (p.t_e == q.t_s || q.t_e == p.t_s) return {true, TemporalRule::Meet};
    if (p.t_s == q.t_s) return {true, TemporalRule::StartTogether};
    if (p.t_e == q.t_e) return {true, TemporalRule::EndTogether};
    if ((p.t_s > q.t_s && p.t_e < q.t_e) || (q.t_s > p.t_s && q.t_e < p.t_e))
        return {true, TemporalRule::FullOverlap};
    if ((p.t_s < q.t_s && p.t_e < q.t_e && p.t_e > q.t_s) ||
        (q.t_s < p.t_s && q.t_e < p.t_e && q.t_e > p.t_s))
        return {true, TemporalRule::PartialOverlap};
    if (p.t_s == q.t_s && p.t_e == q.t_e) return {true, TemporalRule::Equal};
    // Disjoint intervals: composable when the gap stays within Lambda.
    const double gap = std::max(static_cast<double>(std::max(p.t_s, q.t_s)) -
                                    static_cast<double>(std::min(p.t_e, q.t_e)),
                                0.0);
    if (gap <= lambda_s) return {true, TemporalRule::WithinLambda};
    return {false, std::nullopt};
}

double overlap_t(const ServiceRecord& a, const ServiceRecord& b, double lambda_s) {
    if (lambda_s <= 0.0) throw DataError("overlap_t: Lambda must be positive");
    return dist_t(a.time, b.time) / lambda_s;
}

namespace {

double circular_diff_deg(double a, double b) {
    double d = std::abs(normalize_bearing(a) - normalize_bearing(b));
    return std::min(d, 360.0 - d);
}

bool shared_vantage(const ServiceRecord& a, const ServiceRecord& b, double delta_m,
                    double vartheta_deg) {
    if (!direction_compatible(a, b)) return false;
    if (dist(a.xy, b.xy) > delta_m) return false;
    if (circular_diff_deg(*a.coverage.dir_deg, *b.coverage.dir_deg) > vartheta_deg) return false;
    const double ratio = a.coverage.vis_d_m / b.coverage.vis_d_m;
    if (ratio < 0.5 || ratio > 2.0) return false;
    return std::abs(a.coverage.alpha_deg - b.coverage.alpha_deg) <= vartheta_deg;
}

// Same disjunction as spatially_composable, cheapest tests first; used on
// the cluster-pair hot path where the matched rule name is not needed.
bool spatially_composable_fast(const ServiceRecord& a, const ServiceRecord& b, double delta_m,
                               double vartheta_deg) {
    if (dist(a.xy, b.xy) <= delta_m) return true;
    if (shared_vantage(a, b, delta_m, vartheta_deg)) return true;
    return sectors_intersect(record_sector(a), record_sector(b));
}

}  // namespace

std::pair<bool, std::optional<SpatialRule>> spatially_composable(const ServiceRecord& a,
                                                                 const ServiceRecord& b,
                                                                 double delta_m,
                                                                 double vartheta_deg) {
    if (shared_vantage(a, b, delta_m, vartheta_deg)) return {true, SpatialRule::SharedVantage};
    if (sectors_intersect(record_sector(a), record_sector(b)))
        return {true, SpatialRule::BoundaryTouch};
    if (dist(a.xy, b.xy) <= delta_m) return {true, SpatialRule::WithinDelta};
    return {false, std::nullopt};
}

double overlap_s(const ServiceRecord& a, const ServiceRecord& b) {
    return sector_iou(record_sector(a), record_sector(b));
}

ComposabilityVerdict assess_pair(const ServiceRecord& a, const ServiceRecord& b,
                                 const ComposabilityThresholds& th) {
    ComposabilityVerdict v;
    auto [tc, trule] = temporally_composable(a, b, th.lambda_s);
    v.temporal = tc;
    v.temporal_rule = trule;
    auto [sc, srule] = spatially_composable(a, b, th.delta_m, th.vartheta_deg);
    v.spatial = sc;
    v.spatial_rule = srule;
    v.overlap_t = th.lambda_s > 0.0 ? overlap_t(a, b, th.lambda_s) : 0.0;
    v.overlap_s = overlap_s(a, b);
    return v;
}

bool clusters_composable(const Cluster& x, const Cluster& y, const Corpus& corpus,
                         const ComposabilityThresholds& th) {
    if (x.member_ids.empty() || y.member_ids.empty()) return false;
    bool any_temporal = false;
    for (const auto& ida : x.member_ids) {
        const auto& a = corpus.at(corpus.index_of(ida));
        for (const auto& idb : y.member_ids) {
            const auto& b = corpus.at(corpus.index_of(idb));
            auto [tc, trule] = temporally_composable(a, b, th.lambda_s);
            if (!tc) continue;
            any_temporal = true;
            if (spatially_composable_fast(a, b, th.delta_m, th.vartheta_deg)) return true;
        }
    }
    // Spatially far chains still compose on temporal proximity plus
    // contextual relatedness.
    return any_temporal && relation(x, y, corpus) >= th.theta;
}

}  // namespace socsen
