#pragma once

#include <cstdint>
#include <vector>

#include "socsen/record.hpp"
#include "socsen/rtree.hpp"
#include "socsen/sector.hpp"
#include "socsen/semantics.hpp"

namespace socsen {

/// A direction-coherent spatio-temporal group of records.
/// member_ids lists the seed first, then absorbed neighbours in ascending
/// id order. The quarantine cluster for records without a direction carries
/// directionless = true and is excluded from recommendation and composition.
struct Cluster {
    int id{0};
    std::string seed_id;
    std::vector<std::string> member_ids;
    Quadrant quadrant{Quadrant::NE};
    bool directionless{false};
    TimeInterval time_span;  // min t_s .. max t_e over members
    std::vector<KeywordEntry> keyword_table;

    bool contains(const std::string& rid) const {
        for (const auto& m : member_ids)
            if (m == rid) return true;
        return false;
    }
};

/// Representative footprint of a cluster: the seed's directed sector plus
/// the member sectors whose union forms the geographic patch.
struct GeoPatch {
    Sector representative;
    std::vector<Sector> member_sectors;
};

/// Coverage sector of a record in projected coordinates. Records without a
/// direction get a full disc.
Sector record_sector(const ServiceRecord& r);

GeoPatch geo_patch(const Cluster& c, const Corpus& corpus);

/// Spatio-temporal bounds of a cluster (union of member record boxes).
Mbr3 cluster_mbr(const Cluster& c, const Corpus& corpus);

/// Whether the cluster footprint touches `region` on all three axes.
bool cluster_intersects(const Cluster& c, const Corpus& corpus, const Mbr3& region);

/// Unlabelled records within delta (dist_s) and lambda (dist_t) of the seed,
/// excluding the seed itself, ascending id order. `labels[i] != 0` marks a
/// record as already clustered; pass all zeros for a plain neighbourhood.
std::vector<std::uint32_t> neighbours(const Corpus& corpus, const RTree3& index,
                                      std::uint32_t seed_idx, double delta_m, double lambda_s,
                                      const std::vector<int>& labels);

/// Same-quadrant test on the two records' directions. Records without a
/// direction are never compatible.
bool direction_compatible(const ServiceRecord& a, const ServiceRecord& b);

/// Single-pass seed clustering: each unlabelled record (ascending id)
/// becomes a seed and absorbs its direction-compatible delta/lambda
/// neighbours; no transitive expansion. Every record lands in exactly one
/// cluster. Keyword tables are left empty here.
std::vector<Cluster> cluster_corpus(const Corpus& corpus, const RTree3& index, double delta_m,
                                    double lambda_s);

}  // namespace socsen
