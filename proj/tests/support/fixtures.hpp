#pragma once

// Synthetic corpora and record builders shared by the unit suites and the
// acceptance binary.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "socsen/record.hpp"
#include "socsen/semantics.hpp"

namespace fixtures {

/// Base timestamp of the synthetic corpora: 2017-01-20T13:20:00Z.
inline constexpr std::int64_t kBaseTime = 1484918400;

/// Nominal city anchor the builders place records around.
inline constexpr socsen::GeoPoint kAnchor{144.9634, -37.8101};

struct RecordSpec {
    std::string id;
    double x_m{0};
    double y_m{0};
    std::int64_t t_rel{0};   // seconds after kBaseTime
    std::int64_t dur_s{0};   // interval length
    double dir_deg{45.0};
    double vis_d_m{50.0};
    double alpha_deg{60.0};
    std::vector<std::string> tags;
    std::string description;
    std::vector<std::string> noise_terms;
    int res_w{1920};
    int res_h{1080};
};

/// Builds a record at a metric offset from the anchor.
socsen::ServiceRecord make_record(const RecordSpec& spec);

/// Uniform random corpus: positions inside a square of `extent_m`, times
/// inside `timespan_s`, random coverage. Deterministic for a fixed seed.
socsen::Corpus random_corpus(std::size_t n, std::uint64_t seed, double extent_m = 10000.0,
                             std::int64_t timespan_s = 30 * 86400);

/// Random box inside the random_corpus domain.
socsen::Mbr3 random_region(std::mt19937_64& rng, double extent_m = 10000.0,
                           std::int64_t timespan_s = 30 * 86400);

/// Dense-urban clustering testbed: `events` planted groups of relevant
/// records within 20 m of their seed plus noise rings out to 90 m, one
/// shared timestamp per event. relevant_ids receives the planted ids.
socsen::Corpus delta_sweep_corpus(int events, std::vector<std::vector<std::string>>* relevant,
                                  std::vector<std::string>* seeds);

/// Selection testbed with similarity tiers against the phrase "red car":
/// 1.0 / 0.8 (synonym) / 0.667 / 0.4 / 0.0, one co-located cluster.
/// Ground-truth relevant ids are the 1.0/0.8/0.667-relevant tiers.
struct ThetaSweepData {
    socsen::Corpus corpus;
    socsen::SynonymDict dict;
    std::vector<std::string> relevant_ids;
    std::vector<std::string> irrelevant_ids;
    socsen::Query query;
};
ThetaSweepData theta_sweep_corpus();

/// City-scale throughput corpus of exactly `n` records: planted events plus
/// background noise over a few hours, with a query hitting the events.
struct ThroughputData {
    socsen::Corpus corpus;
    socsen::Query query;
};
ThroughputData throughput_corpus(std::size_t n, std::uint64_t seed);

}  // namespace fixtures
