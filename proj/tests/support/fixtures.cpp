#include "support/fixtures.hpp"

#include <cmath>

#include "socsen/geo.hpp"

namespace fixtures {

using namespace socsen;

ServiceRecord make_record(const RecordSpec& spec) {
    ServiceRecord r;
    r.id = spec.id;
    r.cloud_id = "cloud-1";
    r.location = unproject({spec.x_m, spec.y_m}, kAnchor);
    r.time = {kBaseTime + spec.t_rel, kBaseTime + spec.t_rel + spec.dur_s};
    r.coverage.vis_d_m = spec.vis_d_m;
    r.coverage.dir_deg = normalize_bearing(spec.dir_deg);
    r.coverage.alpha_deg = spec.alpha_deg;
    r.description = spec.description;
    r.tags = spec.tags;
    r.quality.res_w = spec.res_w;
    r.quality.res_h = spec.res_h;
    r.quality.noise_terms = spec.noise_terms;
    return r;
}

namespace {

std::string padded(const char* prefix, int i, int width = 5) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s%0*d", prefix, width, i);
    return buf;
}

}  // namespace

Corpus random_corpus(std::size_t n, std::uint64_t seed, double extent_m,
                     std::int64_t timespan_s) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> pos(0.0, extent_m);
    std::uniform_int_distribution<std::int64_t> when(0, timespan_s);
    std::uniform_int_distribution<std::int64_t> dur(0, 120);
    std::uniform_real_distribution<double> dir(0.0, 360.0);
    std::uniform_real_distribution<double> vis(5.0, 80.0);
    std::uniform_real_distribution<double> alpha(30.0, 360.0);
    std::bernoulli_distribution point_stamp(0.7);

    std::vector<ServiceRecord> records;
    records.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        RecordSpec spec;
        spec.id = padded("r", static_cast<int>(i));
        spec.x_m = pos(rng);
        spec.y_m = pos(rng);
        spec.t_rel = when(rng);
        spec.dur_s = point_stamp(rng) ? 0 : dur(rng);
        spec.dir_deg = dir(rng);
        spec.vis_d_m = vis(rng);
        spec.alpha_deg = alpha(rng);
        spec.tags = {"scene"};
        records.push_back(make_record(spec));
    }
    return Corpus(std::move(records));
}

Mbr3 random_region(std::mt19937_64& rng, double extent_m, std::int64_t timespan_s) {
    std::uniform_real_distribution<double> pos(-0.1 * extent_m, 1.1 * extent_m);
    std::uniform_real_distribution<double> len(10.0, 0.3 * extent_m);
    std::uniform_int_distribution<std::int64_t> when(0, timespan_s);
    std::uniform_int_distribution<std::int64_t> tlen(0, timespan_s / 4);
    const double x = pos(rng), y = pos(rng);
    const double w = len(rng), h = len(rng);
    const auto t0 = static_cast<double>(kBaseTime + when(rng));
    const auto tl = static_cast<double>(tlen(rng));
    return {x, x + w, y, y + h, t0, t0 + tl};
}

Corpus delta_sweep_corpus(int events, std::vector<std::vector<std::string>>* relevant,
                          std::vector<std::string>* seeds) {
    std::vector<ServiceRecord> records;
    if (relevant) relevant->assign(events, {});
    // Noise radii chosen so each delta step beyond the 20 m event radius
    // absorbs a couple more bystander records.
    const double noise_radii[] = {26, 34, 47, 55, 63, 68, 74, 78, 84, 88, 25, 52};
    for (int e = 0; e < events; ++e) {
        const double cx = 500.0 + 400.0 * e;
        const double cy = 400.0;
        const std::int64_t t = 600 + 3600 * e;
        for (int k = 0; k < 6; ++k) {
            RecordSpec spec;
            spec.id = padded(("e" + std::to_string(e) + "r").c_str(), k, 2);
            const double ang = deg2rad(60.0 * k);
            const double rad = k == 0 ? 0.0 : 14.0;
            spec.x_m = cx + rad * std::cos(ang);
            spec.y_m = cy + rad * std::sin(ang);
            spec.t_rel = t;
            spec.dir_deg = 30.0 + 5.0 * k;
            spec.tags = {"red car", "collision"};
            spec.description = "Red car collision";
            records.push_back(make_record(spec));
            if (relevant) (*relevant)[e].push_back(spec.id);
            if (seeds && k == 0) seeds->push_back(spec.id);
        }
        int z = 0;
        for (double rad : noise_radii) {
            RecordSpec spec;
            spec.id = padded(("e" + std::to_string(e) + "z").c_str(), z, 2);
            const double ang = deg2rad(25.0 + 30.0 * z);
            spec.x_m = cx + rad * std::cos(ang);
            spec.y_m = cy + rad * std::sin(ang);
            spec.t_rel = t;
            spec.dir_deg = 40.0 + 3.0 * z;  // same quadrant as the event
            spec.tags = {"street", "crowd"};
            spec.description = "Street crowd";
            records.push_back(make_record(spec));
            ++z;
        }
    }
    return Corpus(std::move(records));
}

ThetaSweepData theta_sweep_corpus() {
    ThetaSweepData data;
    data.dict.add_class("veh", KeywordCategory::ObjectOfInterest, {"red car", "crimson car"});

    struct Tier {
        const char* prefix;
        int count;
        std::string tag;
        bool relevant;
    };
    const Tier tiers[] = {
        {"a_exact", 4, "red car", true},
        {"b_syn", 3, "crimson car", true},
        {"c_part", 3, "red car parked", true},
        {"d_decoy", 2, "red car sticker", false},
        {"e_weak", 3, "red car tall pine tree", false},
        {"f_none", 3, "ferry dock", false},
    };
    std::vector<ServiceRecord> records;
    int k = 0;
    for (const auto& tier : tiers) {
        for (int i = 0; i < tier.count; ++i, ++k) {
            RecordSpec spec;
            spec.id = padded(tier.prefix, i, 2);
            const double ang = deg2rad(24.0 * k);
            spec.x_m = 200.0 + 10.0 * std::cos(ang);
            spec.y_m = 200.0 + 10.0 * std::sin(ang);
            spec.t_rel = 900;
            spec.dir_deg = 30.0 + 2.0 * k;
            spec.tags = {tier.tag};
            records.push_back(make_record(spec));
            (tier.relevant ? data.relevant_ids : data.irrelevant_ids).push_back(spec.id);
        }
    }
    data.corpus = Corpus(std::move(records));

    data.query.region.center = unproject({200.0, 200.0}, kAnchor);
    data.query.region.l_m = 120.0;
    data.query.region.w_m = 120.0;
    data.query.window = {kBaseTime, kBaseTime + 3600};
    data.query.phrases = {"red car"};
    return data;
}

ThroughputData throughput_corpus(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> pos(0.0, 3000.0);
    std::uniform_real_distribution<double> dir(0.0, 360.0);
    std::uniform_int_distribution<int> slot(0, 23);
    const char* vocab[] = {"tram",   "market", "ferry", "museum", "stadium",
                           "picnic", "concert", "mural", "bridge", "harbour"};
    std::uniform_int_distribution<int> word(0, 9);

    std::vector<ServiceRecord> records;
    records.reserve(n);
    // Planted incident near the query point, one timestamp slot.
    const std::size_t planted = std::min<std::size_t>(8, n);
    for (std::size_t i = 0; i < planted; ++i) {
        RecordSpec spec;
        spec.id = padded("p", static_cast<int>(i), 4);
        spec.x_m = 1500.0 + 3.0 * static_cast<double>(i);
        spec.y_m = 1500.0 + 2.0 * static_cast<double>(i % 4);
        spec.t_rel = 1800;
        spec.dir_deg = 40.0 + static_cast<double>(i);
        spec.tags = {"red car", "accident"};
        spec.description = "Red car accident";
        records.push_back(make_record(spec));
    }
    for (std::size_t i = planted; i < n; ++i) {
        RecordSpec spec;
        spec.id = padded("q", static_cast<int>(i), 5);
        spec.x_m = pos(rng);
        spec.y_m = pos(rng);
        spec.t_rel = 600 * slot(rng);  // bursts: many shared timestamps
        spec.dir_deg = dir(rng);
        spec.tags = {vocab[word(rng)]};
        spec.description = "";
        records.push_back(make_record(spec));
    }
    ThroughputData data;
    data.corpus = Corpus(std::move(records));
    data.query.region.center = unproject({1500.0, 1500.0}, kAnchor);
    data.query.region.l_m = 200.0;
    data.query.region.w_m = 200.0;
    data.query.window = {kBaseTime, kBaseTime + 6 * 3600};
    data.query.phrases = {"red car", "accident"};
    return data;
}

}  // namespace fixtures
