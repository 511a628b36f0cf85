#include "tapestry.h"

#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "socsen/corpus_io.hpp"
#include "socsen/pipeline.hpp"
#include "socsen/report.hpp"

using nlohmann::ordered_json;

struct tap_corpus {
    socsen::Corpus corpus;
    std::vector<socsen::IngestIssue> issues;
    int lines_total{0};
};

struct tap_config {
    socsen::EngineConfig cfg;
};

struct tap_query {
    socsen::Query query;
};

struct tap_plan {
    socsen::CompositionPlan plan;
    std::vector<socsen::StageTiming> timings;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <typename F>
tap_status guard(F&& f) {
    try {
        f();
        g_last_error.clear();
        return TAP_OK;
    } catch (const socsen::DataError& e) {
        set_error(e.what());
        return TAP_EDATA;
    } catch (const std::exception& e) {
        set_error(e.what());
        return TAP_EINTERNAL;
    } catch (...) {
        set_error("unknown error");
        return TAP_EINTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

tap_status require(bool ok, const char* what) {
    if (!ok) {
        set_error(std::string("null argument: ") + what);
        return TAP_EUSAGE;
    }
    return TAP_OK;
}

}  // namespace

extern "C" {

const char* tap_version(void) { return "0.1.0"; }

const char* tap_last_error(void) { return g_last_error.c_str(); }

void tap_string_free(char* s) { delete[] s; }

tap_status tap_corpus_open(const char* path, tap_corpus** out) {
    if (auto s = require(path && out, "tap_corpus_open")) return s;
    return guard([&] {
        auto res = socsen::ingest(path);
        auto handle = new tap_corpus{std::move(res.corpus), std::move(res.issues),
                                     res.lines_total};
        *out = handle;
    });
}

tap_status tap_corpus_save(const tap_corpus* corpus, const char* path) {
    if (auto s = require(corpus && path, "tap_corpus_save")) return s;
    return guard([&] { socsen::emit_corpus(corpus->corpus, path); });
}

int tap_corpus_size(const tap_corpus* corpus) {
    return corpus ? static_cast<int>(corpus->corpus.size()) : 0;
}

tap_status tap_corpus_ingest_report(const tap_corpus* corpus, char** json_out) {
    if (auto s = require(corpus && json_out, "tap_corpus_ingest_report")) return s;
    return guard([&] {
        ordered_json j;
        j["lines_total"] = corpus->lines_total;
        j["records_kept"] = corpus->corpus.size();
        ordered_json issues = ordered_json::array();
        for (const auto& i : corpus->issues)
            issues.push_back({{"line", i.line},
                              {"rejected", i.rejected},
                              {"message", i.message}});
        j["issues"] = std::move(issues);
        *json_out = dup_string(j.dump(2));
    });
}

void tap_corpus_close(tap_corpus* corpus) { delete corpus; }

tap_status tap_config_create(tap_config** out) {
    if (auto s = require(out != nullptr, "tap_config_create")) return s;
    return guard([&] { *out = new tap_config{}; });
}

tap_status tap_config_load(const char* path, tap_config** out) {
    if (auto s = require(path && out, "tap_config_load")) return s;
    return guard([&] { *out = new tap_config{socsen::EngineConfig::load(path)}; });
}

tap_status tap_config_set(tap_config* cfg, const char* key, const char* value) {
    if (auto s = require(cfg && key && value, "tap_config_set")) return s;
    return guard([&] { cfg->cfg.set(key, value); });
}

void tap_config_free(tap_config* cfg) { delete cfg; }

tap_status tap_query_open(const char* path, tap_query** out) {
    if (auto s = require(path && out, "tap_query_open")) return s;
    return guard([&] { *out = new tap_query{socsen::load_query(path)}; });
}

void tap_query_free(tap_query* q) { delete q; }

tap_status tap_cluster_summary(const tap_corpus* corpus, const tap_config* cfg,
                               char** json_out) {
    if (auto s = require(corpus && cfg && json_out, "tap_cluster_summary")) return s;
    return guard([&] {
        socsen::Corpus work = corpus->corpus;
        auto handle = socsen::make_engine(cfg->cfg);
        auto clusters = socsen::run_clustering(work, cfg->cfg, *handle.engine, handle.dict);
        ordered_json j;
        j["records"] = work.size();
        j["clusters"] = clusters.size();
        ordered_json arr = ordered_json::array();
        for (const auto& c : clusters) {
            ordered_json cj;
            cj["id"] = c.id;
            cj["seed_id"] = c.seed_id;
            cj["size"] = c.member_ids.size();
            cj["quadrant"] = socsen::quadrant_name(c.quadrant);
            cj["directionless"] = c.directionless;
            cj["t_start"] = socsen::format_rfc3339(c.time_span.t_s);
            cj["t_end"] = socsen::format_rfc3339(c.time_span.t_e);
            ordered_json kws = ordered_json::array();
            for (std::size_t i = 0; i < c.keyword_table.size() && i < 5; ++i) {
                kws.push_back({{"term", c.keyword_table[i].term},
                               {"category",
                                socsen::keyword_category_name(c.keyword_table[i].category)},
                               {"freq", c.keyword_table[i].freq},
                               {"rel_freq", c.keyword_table[i].rel_freq}});
            }
            cj["top_keywords"] = std::move(kws);
            cj["member_ids"] = c.member_ids;
            arr.push_back(std::move(cj));
        }
        j["cluster_list"] = std::move(arr);
        *json_out = dup_string(j.dump(2));
    });
}

tap_status tap_recommend_summary(const tap_corpus* corpus, const tap_query* q,
                                 const tap_config* cfg, char** json_out) {
    if (auto s = require(corpus && q && cfg && json_out, "tap_recommend_summary")) return s;
    return guard([&] {
        socsen::Corpus work = corpus->corpus;
        auto handle = socsen::make_engine(cfg->cfg);
        auto clusters = socsen::run_clustering(work, cfg->cfg, *handle.engine, handle.dict);
        auto rec = socsen::recommend(clusters, work, q->query, cfg->cfg.theta, cfg->cfg.top_n,
                                     cfg->cfg.br_margin,
                                     cfg->cfg.search_window(q->query.window), *handle.engine,
                                     handle.dict);
        ordered_json j;
        j["candidate_clusters"] = rec.candidate_clusters;
        j["theta"] = rec.theta;
        j["search_window"] = {{"t_start", socsen::format_rfc3339(rec.search_window.t_s)},
                              {"t_end", socsen::format_rfc3339(rec.search_window.t_e)}};
        j["pruned_records"] = rec.pruned_records;
        ordered_json prim = ordered_json::array();
        for (const auto& c : rec.primary) {
            auto table = socsen::score_keywords_vs_query(c.keyword_table, q->query,
                                                         *handle.engine, handle.dict);
            ordered_json kws = ordered_json::array();
            for (std::size_t i = 0; i < table.size() && i < 5; ++i)
                kws.push_back({{"term", table[i].term},
                               {"category_match", table[i].category_match},
                               {"similarity", table[i].similarity}});
            prim.push_back({{"cluster_id", c.id},
                            {"size", c.member_ids.size()},
                            {"member_ids", c.member_ids},
                            {"top_keywords", std::move(kws)}});
        }
        j["primary"] = std::move(prim);
        ordered_json rel = ordered_json::array();
        for (const auto& [c, score] : rec.related)
            rel.push_back({{"cluster_id", c.id},
                           {"relation", score},
                           {"size", c.member_ids.size()},
                           {"member_ids", c.member_ids}});
        j["related"] = std::move(rel);
        *json_out = dup_string(j.dump(2));
    });
}

tap_status tap_compose(const tap_corpus* corpus, const tap_query* q, const tap_config* cfg,
                       tap_plan** out) {
    if (auto s = require(corpus && q && cfg && out, "tap_compose")) return s;
    return guard([&] {
        socsen::Corpus work = corpus->corpus;
        auto handle = socsen::make_engine(cfg->cfg);
        auto result =
            socsen::run_pipeline(work, q->query, cfg->cfg, *handle.engine, handle.dict);
        *out = new tap_plan{std::move(result.plan), std::move(result.timings)};
    });
}

tap_status tap_plan_to_json(const tap_plan* plan, char** json_out) {
    if (auto s = require(plan && json_out, "tap_plan_to_json")) return s;
    return guard([&] { *json_out = dup_string(socsen::plan_to_json(plan->plan)); });
}

tap_status tap_plan_open(const char* path, tap_plan** out) {
    if (auto s = require(path && out, "tap_plan_open")) return s;
    return guard([&] { *out = new tap_plan{socsen::load_plan(path), {}}; });
}

tap_status tap_plan_timings(const tap_plan* plan, char** json_out) {
    if (auto s = require(plan && json_out, "tap_plan_timings")) return s;
    return guard([&] {
        ordered_json arr = ordered_json::array();
        for (const auto& t : plan->timings)
            arr.push_back({{"stage", t.stage}, {"ms", t.ms}});
        *json_out = dup_string(arr.dump(2));
    });
}

tap_status tap_report(const tap_plan* plan, const tap_corpus* corpus, const char* out_dir) {
    if (auto s = require(plan && corpus && out_dir, "tap_report")) return s;
    return guard([&] { socsen::emit_report(plan->plan, corpus->corpus, out_dir); });
}

void tap_plan_free(tap_plan* plan) { delete plan; }

}  // extern "C"
