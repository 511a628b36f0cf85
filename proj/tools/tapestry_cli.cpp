// Command-line front end of the tapestry composition engine. Talks to the
// engine exclusively through the C API in tapestry.h.
#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tapestry.h"

namespace {

int fail(tap_status status) {
    std::fprintf(stderr, "error: %s\n", tap_last_error());
    return static_cast<int>(status);
}

struct ConfigHandle {
    tap_config* cfg{nullptr};
    ~ConfigHandle() { tap_config_free(cfg); }
};

struct CorpusHandle {
    tap_corpus* corpus{nullptr};
    ~CorpusHandle() { tap_corpus_close(corpus); }
};

struct QueryHandle {
    tap_query* query{nullptr};
    ~QueryHandle() { tap_query_free(query); }
};

struct PlanHandle {
    tap_plan* plan{nullptr};
    ~PlanHandle() { tap_plan_free(plan); }
};

struct StringOut {
    char* s{nullptr};
    ~StringOut() { tap_string_free(s); }
};

struct CommonOpts {
    std::string config_path;
    std::optional<double> delta;
    std::optional<double> lambda;
    std::optional<double> theta;
    std::string synonyms;
    std::string engine;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "engine config file (key = value lines)");
    cmd->add_option("--delta", opts.delta, "clustering spatial radius, meters");
    cmd->add_option("--lambda", opts.lambda, "clustering temporal radius, seconds");
    cmd->add_option("--theta", opts.theta, "semantic similarity threshold");
    cmd->add_option("--synonyms", opts.synonyms, "synonym dictionary file");
    cmd->add_option("--engine", opts.engine, "similarity engine: local or remote");
}

tap_status build_config(const CommonOpts& opts, ConfigHandle& out) {
    tap_status s = opts.config_path.empty()
                       ? tap_config_create(&out.cfg)
                       : tap_config_load(opts.config_path.c_str(), &out.cfg);
    if (s != TAP_OK) return s;
    auto set = [&](const char* key, const std::string& value) {
        return tap_config_set(out.cfg, key, value.c_str());
    };
    if (opts.delta && (s = set("delta_m", std::to_string(*opts.delta)))) return s;
    if (opts.lambda && (s = set("lambda_s", std::to_string(*opts.lambda)))) return s;
    if (opts.theta && (s = set("theta", std::to_string(*opts.theta)))) return s;
    if (!opts.synonyms.empty() && (s = set("synonyms", opts.synonyms))) return s;
    if (!opts.engine.empty() && (s = set("engine", opts.engine))) return s;
    return TAP_OK;
}

int write_or_print(const std::string& out_path, const char* text) {
    if (out_path.empty()) {
        std::fputs(text, stdout);
        std::fputc('\n', stdout);
        return 0;
    }
    std::FILE* f = std::fopen(out_path.c_str(), "wb");
    if (!f) {
        std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
        return static_cast<int>(TAP_EDATA);
    }
    std::fputs(text, f);
    std::fclose(f);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tapestry: metadata-only spatio-temporal scene composition"};
    app.require_subcommand(1);

    std::string seed_order = "id";
    app.add_option("--seed-order", seed_order,
                   "cluster seed iteration order (only 'id' is supported)")
        ->default_val("id");

    // ingest
    auto* ingest = app.add_subcommand("ingest", "validate a JSONL corpus file");
    std::string ingest_path, ingest_out;
    ingest->add_option("file", ingest_path, "corpus file")->required();
    ingest->add_option("--out", ingest_out, "write the normalized corpus here");

    // cluster
    auto* cluster = app.add_subcommand("cluster", "cluster a corpus and print a summary");
    std::string cluster_path, cluster_out;
    CommonOpts cluster_opts;
    cluster->add_option("file", cluster_path, "corpus file")->required();
    cluster->add_option("--out", cluster_out, "write the summary JSON here");
    add_common(cluster, cluster_opts);

    // recommend
    auto* recommend = app.add_subcommand("recommend", "run cluster recommendation for a query");
    std::string rec_path, rec_query, rec_out;
    CommonOpts rec_opts;
    recommend->add_option("file", rec_path, "corpus file")->required();
    recommend->add_option("--query", rec_query, "query JSON file")->required();
    recommend->add_option("--out", rec_out, "write the summary JSON here");
    add_common(recommend, rec_opts);

    // compose
    auto* compose = app.add_subcommand("compose", "run the full pipeline and emit the report");
    std::string comp_path, comp_query, comp_out;
    CommonOpts comp_opts;
    compose->add_option("file", comp_path, "corpus file")->required();
    compose->add_option("--query", comp_query, "query JSON file")->required();
    compose->add_option("--out", comp_out, "output directory")->required();
    add_common(compose, comp_opts);

    // report
    auto* report = app.add_subcommand("report", "regenerate the report from a plan.json");
    std::string report_plan, report_corpus, report_out;
    report->add_option("plan", report_plan, "plan.json file")->required();
    report->add_option("--corpus", report_corpus, "corpus file")->required();
    report->add_option("--out", report_out, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    if (seed_order != "id") {
        std::fprintf(stderr, "error: unsupported --seed-order '%s' (only 'id')\n",
                     seed_order.c_str());
        return static_cast<int>(TAP_EUSAGE);
    }

    if (*ingest) {
        CorpusHandle corpus;
        if (auto s = tap_corpus_open(ingest_path.c_str(), &corpus.corpus)) return fail(s);
        StringOut rep;
        if (auto s = tap_corpus_ingest_report(corpus.corpus, &rep.s)) return fail(s);
        std::printf("%s\n", rep.s);
        if (!ingest_out.empty()) {
            if (auto s = tap_corpus_save(corpus.corpus, ingest_out.c_str())) return fail(s);
            std::fprintf(stderr, "wrote %d records to %s\n", tap_corpus_size(corpus.corpus),
                         ingest_out.c_str());
        }
        return 0;
    }

    if (*cluster) {
        ConfigHandle cfg;
        if (auto s = build_config(cluster_opts, cfg)) return fail(s);
        CorpusHandle corpus;
        if (auto s = tap_corpus_open(cluster_path.c_str(), &corpus.corpus)) return fail(s);
        StringOut summary;
        if (auto s = tap_cluster_summary(corpus.corpus, cfg.cfg, &summary.s)) return fail(s);
        return write_or_print(cluster_out, summary.s);
    }

    if (*recommend) {
        ConfigHandle cfg;
        if (auto s = build_config(rec_opts, cfg)) return fail(s);
        CorpusHandle corpus;
        if (auto s = tap_corpus_open(rec_path.c_str(), &corpus.corpus)) return fail(s);
        QueryHandle query;
        if (auto s = tap_query_open(rec_query.c_str(), &query.query)) return fail(s);
        StringOut summary;
        if (auto s = tap_recommend_summary(corpus.corpus, query.query, cfg.cfg, &summary.s))
            return fail(s);
        return write_or_print(rec_out, summary.s);
    }

    if (*compose) {
        ConfigHandle cfg;
        if (auto s = build_config(comp_opts, cfg)) return fail(s);
        CorpusHandle corpus;
        if (auto s = tap_corpus_open(comp_path.c_str(), &corpus.corpus)) return fail(s);
        QueryHandle query;
        if (auto s = tap_query_open(comp_query.c_str(), &query.query)) return fail(s);
        PlanHandle plan;
        if (auto s = tap_compose(corpus.corpus, query.query, cfg.cfg, &plan.plan))
            return fail(s);
        StringOut timings;
        if (auto s = tap_plan_timings(plan.plan, &timings.s)) return fail(s);
        std::fprintf(stderr, "stage timings: %s\n", timings.s);
        if (auto s = tap_report(plan.plan, corpus.corpus, comp_out.c_str())) return fail(s);
        std::printf("report written to %s\n", comp_out.c_str());
        return 0;
    }

    if (*report) {
        PlanHandle plan;
        if (auto s = tap_plan_open(report_plan.c_str(), &plan.plan)) return fail(s);
        CorpusHandle corpus;
        if (auto s = tap_corpus_open(report_corpus.c_str(), &corpus.corpus)) return fail(s);
        if (auto s = tap_report(plan.plan, corpus.corpus, report_out.c_str())) return fail(s);
        std::printf("report written to %s\n", report_out.c_str());
        return 0;
    }
    return static_cast<int>(TAP_EUSAGE);
}
