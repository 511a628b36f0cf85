#include "socsen/cluster.hpp"

#include <algorithm>

namespace socsen {

Sector record_sector(const ServiceRecord& r) {
    Sector s{r.xy, r.coverage.vis_d_m, 0.0, r.coverage.alpha_deg};
    if (r.coverage.dir_deg)
        s.dir_deg = normalize_bearing(*r.coverage.dir_deg);
    else
        s.alpha_deg = 360.0;
    return s;
}

GeoPatch geo_patch(const Cluster& c, const Corpus& corpus) {
    GeoPatch patch;
    patch.representative = record_sector(corpus.at(corpus.index_of(c.seed_id)));
    patch.member_sectors.reserve(c.member_ids.size());
    for (const auto& id : c.member_ids)
        patch.member_sectors.push_back(record_sector(corpus.at(corpus.index_of(id))));
    return patch;
}

Mbr3 cluster_mbr(const Cluster& c, const Corpus& corpus) {
    Mbr3 m = mbr_of(corpus.at(corpus.index_of(c.member_ids.front())));
    for (std::size_t i = 1; i < c.member_ids.size(); ++i)
        m = m.merged(mbr_of(corpus.at(corpus.index_of(c.member_ids[i]))));
    return m;
}

bool cluster_intersects(const Cluster& c, const Corpus& corpus, const Mbr3& region) {
    const double span_s = static_cast<double>(c.time_span.t_s);
    const double span_e = static_cast<double>(c.time_span.t_e);
    if (span_e < region.t_min || span_s > region.t_max) return false;
    for (const auto& id : c.member_ids) {
        const auto& r = corpus.at(corpus.index_of(id));
        if (static_cast<double>(r.time.t_e) < region.t_min ||
            static_cast<double>(r.time.t_s) > region.t_max)
            continue;
        if (sector_intersects_box(record_sector(r), region)) return true;
    }
    return false;
}

std::vector<std::uint32_t> neighbours(const Corpus& corpus, const RTree3& index,
                                      std::uint32_t seed_idx, double delta_m, double lambda_s,
                                      const std::vector<int>& labels) {
    const ServiceRecord& seed = corpus.at(seed_idx);
    // The index query box covers every record whose location is within
    // delta of the seed and whose interval endpoints are within lambda:
    // record boxes contain the apex location and the full time interval,
    // so this is a superset of the exact neighbourhood.
    Mbr3 probe{seed.xy.x - delta_m, seed.xy.x + delta_m,
               seed.xy.y - delta_m, seed.xy.y + delta_m,
               static_cast<double>(seed.time.t_s) - lambda_s,
               static_cast<double>(seed.time.t_e) + lambda_s};
    std::vector<std::uint32_t> out;
    for (const auto& id : index.range_query(probe)) {
        const std::uint32_t idx = corpus.index_of(id);
        if (idx == seed_idx || labels[idx] != 0) continue;
        const ServiceRecord& r = corpus.at(idx);
        if (dist(seed.xy, r.xy) <= delta_m && dist_t(seed.time, r.time) <= lambda_s)
            out.push_back(idx);
    }
    std::sort(out.begin(), out.end());  // corpus order == ascending id
    return out;
}

bool direction_compatible(const ServiceRecord& a, const ServiceRecord& b) {
    if (!a.coverage.dir_deg || !b.coverage.dir_deg) return false;
    return quadrant(normalize_bearing(*a.coverage.dir_deg)) ==
           quadrant(normalize_bearing(*b.coverage.dir_deg));
}

std::vector<Cluster> cluster_corpus(const Corpus& corpus, const RTree3& index, double delta_m,
                                    double lambda_s) {
    std::vector<Cluster> clusters;
    std::vector<int> labels(corpus.size(), 0);
    std::vector<std::uint32_t> directionless;
    int next_label = 1;

    for (std::uint32_t i = 0; i < corpus.size(); ++i) {
        if (labels[i] != 0) continue;
        const ServiceRecord& seed = corpus.at(i);
        if (!seed.coverage.dir_deg) {
            directionless.push_back(i);
            labels[i] = -1;
            continue;
        }
        Cluster c;
        c.id = next_label++;
        c.seed_id = seed.id;
        c.member_ids.push_back(seed.id);
        c.quadrant = quadrant(normalize_bearing(*seed.coverage.dir_deg));
        c.time_span = seed.time;
        labels[i] = c.id;

        for (std::uint32_t j : neighbours(corpus, index, i, delta_m, lambda_s, labels)) {
            const ServiceRecord& r = corpus.at(j);
            if (!direction_compatible(seed, r)) continue;
            labels[j] = c.id;
            c.member_ids.push_back(r.id);
            c.time_span.t_s = std::min(c.time_span.t_s, r.time.t_s);
            c.time_span.t_e = std::max(c.time_span.t_e, r.time.t_e);
        }
        clusters.push_back(std::move(c));
    }

    if (!directionless.empty()) {
        Cluster c;
        c.id = 0;
        c.directionless = true;
        c.seed_id = corpus.at(directionless.front()).id;
        c.time_span = corpus.at(directionless.front()).time;
        for (std::uint32_t i : directionless) {
            const ServiceRecord& r = corpus.at(i);
            c.member_ids.push_back(r.id);
            c.time_span.t_s = std::min(c.time_span.t_s, r.time.t_s);
            c.time_span.t_e = std::max(c.time_span.t_e, r.time.t_e);
        }
        clusters.push_back(std::move(c));
    }
    return clusters;
}

}  // namespace socsen
