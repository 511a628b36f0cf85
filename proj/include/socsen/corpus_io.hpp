#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "socsen/record.hpp"

namespace socsen {

/// Parses an RFC 3339 timestamp ("2017-01-20T13:30:00Z" or with a numeric
/// zone offset) into UTC seconds. Fractional seconds are truncated.
/// Throws DataError on malformed input.
std::int64_t parse_rfc3339(const std::string& s);

/// Formats UTC seconds as "YYYY-MM-DDTHH:MM:SSZ".
std::string format_rfc3339(std::int64_t utc_seconds);

/// Per-line ingestion problems, in file order.
struct IngestIssue {
    int line{0};
    bool rejected{false};  // false: record kept, message is a warning
    std::string message;
};

struct IngestResult {
    Corpus corpus;
    std::vector<IngestIssue> issues;
    int lines_total{0};
    int records_kept{0};

    std::string summary() const;
};

/// Reads a newline-delimited JSON corpus. Lines that fail validation are
/// collected with their line numbers; the ingest succeeds as long as at
/// least one record is valid. Throws DataError on an unreadable file or a
/// corpus with zero valid records.
IngestResult ingest(const std::string& path);

/// Parses one corpus JSON object (exposed for the ingest tests).
ServiceRecord parse_record_json(const std::string& line, std::vector<std::string>* warnings);

/// Writes the canonical JSONL form (fixed key order, RFC 3339 UTC times).
/// ingest(emit(corpus)) reproduces the corpus exactly.
void emit_corpus(const Corpus& corpus, const std::string& path);
std::string record_to_jsonl(const ServiceRecord& r);

/// Reads a query file: JSON with region/window/phrases keys.
Query load_query(const std::string& path);
Query parse_query_json(const std::string& text);

const char* shooting_mode_name(ShootingMode m);
const char* colour_name(ColourQuality c);

}  // namespace socsen
