// Acceptance suite: one check per shipped guarantee, one PASS/FAIL line
// each, nonzero exit if anything fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "socsen/composability.hpp"
#include "socsen/corpus_io.hpp"
#include "socsen/pipeline.hpp"
#include "socsen/report.hpp"
#include "socsen/rtree.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace socsen;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " - ", detail.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct ScenarioRun {
    CompositionPlan plan;
    RecommendationResult recommendation;
    std::string plan_json;
};

ScenarioRun run_scenario() {
    auto res = ingest(TAPESTRY_DATA_DIR "/scenario/corpus.jsonl");
    auto query = load_query(TAPESTRY_DATA_DIR "/scenario/query.json");
    auto cfg = EngineConfig::load(TAPESTRY_DATA_DIR "/scenario/config.txt");
    cfg.synonyms_path = TAPESTRY_DATA_DIR "/synonyms.tsv";
    auto handle = make_engine(cfg);
    auto result = run_pipeline(res.corpus, query, cfg, *handle.engine, handle.dict);
    return {result.plan, std::move(result.recommendation), plan_to_json(result.plan)};
}

// --- criterion 1 -----------------------------------------------------------

void criterion_index_oracle() {
    const auto start = Clock::now();
    const Corpus corpus = fixtures::random_corpus(10000, 20260810);
    const RTree3 tree = build_index(corpus);
    std::mt19937_64 rng(4242);
    bool all_equal = tree.size() == corpus.size() && tree.check_structure().empty();
    int mismatches = 0;
    for (int i = 0; i < 100; ++i) {
        const Mbr3 region = fixtures::random_region(rng);
        if (tree.range_query(region) != oracle::scan_range_query(corpus, region))
            ++mismatches;
    }
    const double elapsed = seconds_since(start);
    all_equal = all_equal && mismatches == 0;
    std::ostringstream detail;
    detail << "10000 records, 100 regions, " << mismatches << " mismatches, "
           << std::fixed << elapsed << " s";
    report(1, "range queries equal the linear-scan oracle in under 5 s",
           all_equal && elapsed < 5.0, detail.str());
}

// --- criterion 2 -----------------------------------------------------------

bool same_clusters(const std::vector<Cluster>& a, const std::vector<Cluster>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].id != b[i].id || a[i].seed_id != b[i].seed_id ||
            a[i].member_ids != b[i].member_ids)
            return false;
    return true;
}

void criterion_clustering() {
    std::mt19937_64 seeds(77);
    bool transcription_ok = true;
    for (std::size_t n : {25u, 60u, 120u, 200u}) {
        const Corpus corpus = fixtures::random_corpus(n, seeds(), 250.0, 1800);
        const auto mine = cluster_corpus(corpus, build_index(corpus), 30.0, 120.0);
        const auto ref = oracle::transcribed_clustering(corpus, 30.0, 120.0);
        transcription_ok = transcription_ok && same_clusters(mine, ref);
    }

    const Corpus corpus = fixtures::random_corpus(1000, seeds(), 400.0, 3600);
    const double delta = 30.0, lambda = 180.0;
    const auto clusters = cluster_corpus(corpus, build_index(corpus), delta, lambda);
    std::set<std::string> seen;
    bool invariants_ok = true;
    for (const auto& c : clusters) {
        const auto& seed = corpus.at(corpus.index_of(c.seed_id));
        for (const auto& id : c.member_ids) {
            if (!seen.insert(id).second) invariants_ok = false;
            const auto& r = corpus.at(corpus.index_of(id));
            if (c.directionless) continue;
            if (dist(seed.xy, r.xy) > delta + 1e-9) invariants_ok = false;
            if (dist_t(seed.time, r.time) > lambda + 1e-9) invariants_ok = false;
            if (quadrant(normalize_bearing(*r.coverage.dir_deg)) != c.quadrant)
                invariants_ok = false;
        }
    }
    invariants_ok = invariants_ok && seen.size() == corpus.size();
    report(2, "clustering equals the no-index transcription; invariants hold at 1000 records",
           transcription_ok && invariants_ok,
           transcription_ok ? (invariants_ok ? "" : "invariant violated")
                            : "transcription mismatch");
}

// --- criterion 3 -----------------------------------------------------------

void criterion_worked_example() {
    std::vector<std::pair<std::string, std::int64_t>> stamps = {
        {"a1", 18}, {"a2", 20}, {"a3", 21}, {"a4", 21},
        {"b1", 31}, {"b2", 33}, {"b3", 34}, {"b4", 34}};
    std::vector<ServiceRecord> records;
    for (const auto& [id, t] : stamps) {
        fixtures::RecordSpec spec;
        spec.id = id;
        spec.t_rel = t;
        records.push_back(fixtures::make_record(spec));
    }
    const Corpus corpus(std::move(records));
    auto cluster_with = [&](int id, std::vector<std::string> ids,
                            std::vector<std::string> terms) {
        Cluster c;
        c.id = id;
        c.seed_id = ids.front();
        c.member_ids = std::move(ids);
        for (const auto& t : terms) {
            KeywordEntry e;
            e.term = t;
            e.freq = 1;
            e.rel_freq = 0.2;
            c.keyword_table.push_back(e);
        }
        return c;
    };
    // 2-of-5 uniform keyword overlap between the two tables.
    const auto x = cluster_with(1, {"a1", "a2", "a3", "a4"},
                                {"red car", "road x", "kw1", "kw2", "kw3"});
    const auto y = cluster_with(2, {"b1", "b2", "b3", "b4"},
                                {"red car", "road x", "kw4", "kw5", "kw6"});
    const double t = t_sim(x, y, corpus);
    const double rel = relation(x, y, corpus);
    const bool ok = std::abs(t) == 13.0 && std::abs(rel - 2.0 / 13.0) <= 1e-3;
    std::ostringstream detail;
    detail << "|t| = " << std::abs(t) << ", relation = " << rel;
    report(3, "worked example: means 20/33 with s^2/N = 1/2 give |t| = 13, relation 2/13",
           ok, detail.str());
}

// --- criterion 4 -----------------------------------------------------------

void criterion_welch_oracle() {
    std::mt19937_64 rng(4711);
    std::uniform_int_distribution<int> size(1, 40);
    std::uniform_real_distribution<double> value(-1000.0, 1000.0);
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
        std::vector<double> a(size(rng)), b(size(rng));
        for (auto& v : a) v = value(rng);
        for (auto& v : b) v = value(rng);
        const double mine = welch_t(a, b);
        const double ref = oracle::welford_welch_t(a, b);
        if (std::isinf(ref) || ref == 0.0) {
            if (mine != ref) ++bad;
        } else if (std::abs(mine - ref) / std::abs(ref) >= 1e-9) {
            ++bad;
        }
    }
    report(4, "Welch t matches the independent recomputation on 200 random pairs to 1e-9",
           bad == 0, bad ? std::to_string(bad) + " mismatches" : "");
}

// --- criterion 5 -----------------------------------------------------------

void criterion_truth_tables() {
    auto interval_record = [](std::int64_t s, std::int64_t e) {
        fixtures::RecordSpec spec;
        spec.id = "x";
        spec.t_rel = s;
        spec.dur_s = e - s;
        return fixtures::make_record(spec);
    };
    const double lambda = 100.0;
    struct TCase {
        std::int64_t as, ae, bs, be;
        bool ok;
        TemporalRule rule;
    };
    const TCase tcases[] = {
        {0, 10, 10, 20, true, TemporalRule::Meet},
        {0, 10, 0, 25, true, TemporalRule::StartTogether},
        {0, 25, 10, 25, true, TemporalRule::EndTogether},
        {0, 30, 5, 25, true, TemporalRule::FullOverlap},
        {0, 20, 10, 30, true, TemporalRule::PartialOverlap},
        {5, 15, 5, 15, true, TemporalRule::StartTogether},  // equal intervals
        {0, 10, 60, 80, true, TemporalRule::WithinLambda},
    };
    bool ok = true;
    for (const auto& c : tcases) {
        const auto got =
            temporally_composable(interval_record(c.as, c.ae), interval_record(c.bs, c.be),
                                  lambda);
        if (got.first != c.ok || !got.second || *got.second != c.rule) ok = false;
    }
    if (temporally_composable(interval_record(0, 10), interval_record(111, 120), lambda).first)
        ok = false;

    auto placed = [](double x, double y, double dir, double vis, double alpha) {
        fixtures::RecordSpec spec;
        spec.id = "s";
        spec.x_m = x;
        spec.y_m = y;
        spec.dir_deg = dir;
        spec.vis_d_m = vis;
        spec.alpha_deg = alpha;
        return fixtures::make_record(spec);
    };
    struct SCase {
        ServiceRecord a, b;
        bool ok;
        std::optional<SpatialRule> rule;
    };
    const SCase scases[] = {
        {placed(0, 0, 30, 50, 60), placed(1, 1, 40, 45, 60), true,
         SpatialRule::SharedVantage},
        {placed(0, 0, 30, 50, 60), placed(10000, 0, 30, 50, 60), false, std::nullopt},
        {placed(0, 0, 90, 50, 60), placed(60, 0, 270, 50, 60), true,
         SpatialRule::BoundaryTouch},
        {placed(0, 0, 0, 10, 30), placed(15, -2, 200, 10, 30), true,
         SpatialRule::WithinDelta},
        {placed(0, 0, 40, 60, 50), placed(3, 3, 44, 15, 50), true,
         SpatialRule::BoundaryTouch},
        {placed(0, 0, 45, 20, 40), placed(100, 100, 50, 20, 40), false, std::nullopt},
    };
    for (const auto& c : scases) {
        const auto got = spatially_composable(c.a, c.b, 20.0, 45.0);
        if (got.first != c.ok || got.second != c.rule) ok = false;
    }

    // Eq.-(8) boundary: dist_t equal to Lambda scores exactly 1.
    const auto a = interval_record(0, 0);
    const auto b = interval_record(3, 4);  // dist_t = 5
    if (overlap_t(a, b, 5.0) != 1.0) ok = false;

    report(5, "temporal (7-case) and spatial (6-case) fixtures match; overlap_t boundary is 1",
           ok, "");
}

// --- criterion 6 -----------------------------------------------------------

void criterion_scenario() {
    const ScenarioRun first = run_scenario();
    const ScenarioRun second = run_scenario();

    const std::set<std::string> expected = {"ev01", "ev02", "ev03", "ev04", "ev05", "ev06",
                                            "ev07", "ev08", "ev09", "ev10", "ev11"};
    std::set<std::string> selected;
    bool time_ordered = true;
    for (std::size_t i = 0; i < first.plan.frames.size(); ++i) {
        for (const auto& cell : first.plan.frames[i].cells) selected.insert(cell.record_id);
        if (i > 0 && first.plan.frames[i - 1].time_label.t_s >
                         first.plan.frames[i].time_label.t_s)
            time_ordered = false;
    }

    // The Road X cluster must arrive through the related-context branch.
    bool road_x_via_related = false;
    for (const auto& [c, rel] : first.recommendation.related)
        if (c.contains("ev10") && c.contains("ev11")) road_x_via_related = true;
    bool road_x_primary = false;
    for (const auto& c : first.recommendation.primary)
        if (c.contains("ev10")) road_x_primary = true;

    const bool ok = first.plan.frames.size() == 4 && time_ordered && selected == expected &&
                    road_x_via_related && !road_x_primary &&
                    first.plan_json == second.plan_json;
    std::ostringstream detail;
    detail << first.plan.frames.size() << " frames, " << selected.size()
           << " selected records, road-x via S+: " << (road_x_via_related ? "yes" : "no")
           << ", deterministic: " << (first.plan_json == second.plan_json ? "yes" : "no");
    report(6, "Road X / Road Y scenario: 4 frames, the 11 planted records, S+ chaining",
           ok, detail.str());
}

// --- criterion 7 -----------------------------------------------------------

void criterion_tuning_curves() {
    // Spatial radius sweep on the dense synthetic corpus.
    std::vector<std::vector<std::string>> relevant;
    std::vector<std::string> seeds;
    const Corpus corpus = fixtures::delta_sweep_corpus(3, &relevant, &seeds);
    const RTree3 index = build_index(corpus);
    std::vector<double> mean_relevance;
    for (double delta : {20.0, 40.0, 60.0, 70.0, 80.0, 90.0}) {
        const auto clusters = cluster_corpus(corpus, index, delta, 0.0);
        double sum = 0.0;
        for (std::size_t e = 0; e < seeds.size(); ++e) {
            for (const auto& c : clusters) {
                if (!c.contains(seeds[e])) continue;
                std::size_t hits = 0;
                for (const auto& id : relevant[e])
                    if (c.contains(id)) ++hits;
                sum += static_cast<double>(hits) / static_cast<double>(c.member_ids.size());
                break;
            }
        }
        mean_relevance.push_back(sum / static_cast<double>(seeds.size()));
    }
    bool delta_ok = true;
    for (std::size_t i = 1; i < mean_relevance.size(); ++i)
        if (mean_relevance[0] <= mean_relevance[i]) delta_ok = false;  // 20 m is maximal
    for (std::size_t i = 3; i < mean_relevance.size(); ++i)            // beyond 60 m
        if (mean_relevance[i] > mean_relevance[i - 1] + 1e-12) delta_ok = false;

    // Similarity threshold sweep: selection accuracy falls, relevance rises.
    auto data = fixtures::theta_sweep_corpus();
    LocalEngine engine{data.dict};
    std::vector<double> accuracy, precision;
    for (double theta : {0.25, 0.5, 0.75, 1.0}) {
        Corpus work = data.corpus;
        auto clusters = cluster_corpus(work, build_index(work), 20.0, 0.0);
        extract_contexts(work, clusters, engine, theta, data.dict);
        const auto rec = recommend(clusters, work, data.query, theta, 5, 1.25,
                                   TimeInterval{data.query.window.t_s - 900,
                                                data.query.window.t_e + 900},
                                   engine, data.dict);
        std::set<std::string> selected;
        for (const auto& c : rec.primary)
            selected.insert(c.member_ids.begin(), c.member_ids.end());
        std::size_t hits = 0;
        for (const auto& id : data.relevant_ids) hits += selected.count(id);
        accuracy.push_back(static_cast<double>(hits) /
                           static_cast<double>(data.relevant_ids.size()));
        if (!selected.empty())
            precision.push_back(static_cast<double>(hits) /
                                static_cast<double>(selected.size()));
    }
    bool theta_ok = accuracy.size() == 4;
    for (std::size_t i = 1; i < accuracy.size(); ++i)
        if (accuracy[i] > accuracy[i - 1] + 1e-12) theta_ok = false;
    theta_ok = theta_ok && accuracy.front() > accuracy.back();
    theta_ok = theta_ok && precision.size() >= 3;
    for (std::size_t i = 1; i < precision.size(); ++i)
        if (precision[i] <= precision[i - 1]) theta_ok = false;

    std::ostringstream detail;
    detail << "relevance@delta =";
    for (double r : mean_relevance) detail << " " << r;
    detail << "; accuracy@theta =";
    for (double a : accuracy) detail << " " << a;
    detail << "; precision@theta =";
    for (double p : precision) detail << " " << p;
    report(7, "delta sweep peaks at 20 m and decays past 60 m; theta trades accuracy for relevance",
           delta_ok && theta_ok, detail.str());
}

// --- criterion 8 -----------------------------------------------------------

void criterion_throughput() {
    auto data = fixtures::throughput_corpus(1000, 99);
    EngineConfig cfg;  // engine defaults
    SynonymDict dict;
    LocalEngine engine{dict};
    // Warm-up run, then the measured one.
    {
        Corpus warm = data.corpus;
        run_pipeline(warm, data.query, cfg, engine, dict);
    }
    Corpus work = data.corpus;
    const auto start = Clock::now();
    auto result = run_pipeline(work, data.query, cfg, engine, dict);
    const double ms = seconds_since(start) * 1000.0;
    std::ostringstream detail;
    detail << std::fixed << ms << " ms for " << work.size() << " records, "
           << result.plan.frames.size() << " frames";
    report(8, "full pipeline on 1000 records finishes under 500 ms", ms < 500.0,
           detail.str());
}

// --- criterion 9 -----------------------------------------------------------

void criterion_determinism() {
    const ScenarioRun a = run_scenario();
    const ScenarioRun b = run_scenario();
    report(9, "two identical runs emit byte-identical plan.json", a.plan_json == b.plan_json,
           std::to_string(a.plan_json.size()) + " bytes each");
}

}  // namespace

int main() {
    criterion_index_oracle();
    criterion_clustering();
    criterion_worked_example();
    criterion_welch_oracle();
    criterion_truth_tables();
    criterion_scenario();
    criterion_tuning_curves();
    criterion_throughput();
    criterion_determinism();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
