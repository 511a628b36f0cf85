/* C API of the tapestry composition engine.
 *
 * All functions return tap_status; handles are opaque and must be released
 * with their matching *_free/close call. On any failure the thread-local
 * message from tap_last_error() describes what went wrong. Strings returned
 * through char** out-parameters are heap-allocated; release them with
 * tap_string_free().
 */
#ifndef TAPESTRY_H
#define TAPESTRY_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tap_status {
    TAP_OK = 0,
    TAP_EUSAGE = 1,    /* bad arguments / misuse of the API */
    TAP_EDATA = 2,     /* unreadable or invalid input data */
    TAP_EINTERNAL = 3, /* engine invariant violated */
} tap_status;

typedef struct tap_corpus tap_corpus;
typedef struct tap_config tap_config;
typedef struct tap_query tap_query;
typedef struct tap_plan tap_plan;

const char* tap_version(void);

/* Last error message of the calling thread; empty string if none. */
const char* tap_last_error(void);

void tap_string_free(char* s);

/* Corpus: newline-delimited JSON records. Ingest succeeds when at least one
 * line is valid; the per-line rejection report is available afterwards. */
tap_status tap_corpus_open(const char* path, tap_corpus** out);
tap_status tap_corpus_save(const tap_corpus* corpus, const char* path);
int tap_corpus_size(const tap_corpus* corpus);
tap_status tap_corpus_ingest_report(const tap_corpus* corpus, char** json_out);
void tap_corpus_close(tap_corpus* corpus);

/* Configuration: engine defaults, a `key = value` file, or per-key sets. */
tap_status tap_config_create(tap_config** out);
tap_status tap_config_load(const char* path, tap_config** out);
tap_status tap_config_set(tap_config* cfg, const char* key, const char* value);
void tap_config_free(tap_config* cfg);

/* Query file: JSON with region/window/phrases keys. */
tap_status tap_query_open(const char* path, tap_query** out);
void tap_query_free(tap_query* q);

/* Clustering summary of a corpus as a JSON document. */
tap_status tap_cluster_summary(const tap_corpus* corpus, const tap_config* cfg,
                               char** json_out);

/* Recommendation summary (primary and related cluster sets) as JSON. */
tap_status tap_recommend_summary(const tap_corpus* corpus, const tap_query* q,
                                 const tap_config* cfg, char** json_out);

/* Full pipeline: index, cluster, extract contexts, recommend, compose. */
tap_status tap_compose(const tap_corpus* corpus, const tap_query* q, const tap_config* cfg,
                       tap_plan** out);

tap_status tap_plan_to_json(const tap_plan* plan, char** json_out);
tap_status tap_plan_open(const char* path, tap_plan** out);

/* Per-stage wall-clock timings of the compose run, as JSON. */
tap_status tap_plan_timings(const tap_plan* plan, char** json_out);

/* Writes plan.json, tapestry.svg and index.html into out_dir. */
tap_status tap_report(const tap_plan* plan, const tap_corpus* corpus, const char* out_dir);

void tap_plan_free(tap_plan* plan);

#ifdef __cplusplus
}
#endif

#endif /* TAPESTRY_H */
