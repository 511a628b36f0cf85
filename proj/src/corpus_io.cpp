#include "socsen/corpus_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "socsen/semantics.hpp"

namespace socsen {

namespace {

// Days since 1970-01-01 for a civil date (Howard Hinnant's algorithm).
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2u) / 5u + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    y = static_cast<int>(yoe) + static_cast<int>(era) * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y += (m <= 2);
}

bool all_digits(const std::string& s, std::size_t from, std::size_t count) {
    if (from + count > s.size()) return false;
    for (std::size_t i = from; i < from + count; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

std::int64_t parse_rfc3339(const std::string& s) {
    // YYYY-MM-DD [Tt ] HH:MM:SS [.frac] (Z | +HH:MM | -HH:MM)
    auto fail = [&]() -> std::int64_t {
        throw DataError("invalid RFC 3339 timestamp: '" + s + "'");
    };
    if (s.size() < 20) fail();
    if (!all_digits(s, 0, 4) || s[4] != '-' || !all_digits(s, 5, 2) || s[7] != '-' ||
        !all_digits(s, 8, 2))
        fail();
    const char sep = s[10];
    if (sep != 'T' && sep != 't' && sep != ' ') fail();
    if (!all_digits(s, 11, 2) || s[13] != ':' || !all_digits(s, 14, 2) || s[16] != ':' ||
        !all_digits(s, 17, 2))
        fail();

    const int year = std::stoi(s.substr(0, 4));
    const int month = std::stoi(s.substr(5, 2));
    const int day = std::stoi(s.substr(8, 2));
    const int hour = std::stoi(s.substr(11, 2));
    const int minute = std::stoi(s.substr(14, 2));
    const int second = std::stoi(s.substr(17, 2));
    if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 || minute > 59 ||
        second > 60)
        fail();

    std::size_t pos = 19;
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail();
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    if (pos >= s.size()) fail();

    std::int64_t offset = 0;
    if (s[pos] == 'Z' || s[pos] == 'z') {
        ++pos;
    } else if (s[pos] == '+' || s[pos] == '-') {
        const int sign = s[pos] == '+' ? 1 : -1;
        if (!all_digits(s, pos + 1, 2) || pos + 3 >= s.size() || s[pos + 3] != ':' ||
            !all_digits(s, pos + 4, 2))
            fail();
        const int oh = std::stoi(s.substr(pos + 1, 2));
        const int om = std::stoi(s.substr(pos + 4, 2));
        if (oh > 23 || om > 59) fail();
        offset = sign * (oh * 3600 + om * 60);
        pos += 6;
    } else {
        fail();
    }
    if (pos != s.size()) fail();

    const std::int64_t days = days_from_civil(year, month, day);
    return days * 86400 + hour * 3600 + minute * 60 + second - offset;
}

std::string format_rfc3339(std::int64_t utc_seconds) {
    std::int64_t days = utc_seconds / 86400;
    std::int64_t rem = utc_seconds % 86400;
    if (rem < 0) {
        rem += 86400;
        --days;
    }
    int y, m, d;
    civil_from_days(days, y, m, d);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", y, m, d,
                  static_cast<int>(rem / 3600), static_cast<int>((rem / 60) % 60),
                  static_cast<int>(rem % 60));
    return buf;
}

const char* shooting_mode_name(ShootingMode m) {
    switch (m) {
        case ShootingMode::Square: return "square";
        case ShootingMode::Video: return "video";
        case ShootingMode::Panorama: return "panorama";
        case ShootingMode::Standard: return "standard";
    }
    return "standard";
}

const char* colour_name(ColourQuality c) {
    return c == ColourQuality::Colour ? "colour" : "greyscale";
}

namespace {

ShootingMode parse_shooting_mode(const std::string& s) {
    if (s == "square") return ShootingMode::Square;
    if (s == "video") return ShootingMode::Video;
    if (s == "panorama") return ShootingMode::Panorama;
    if (s == "standard") return ShootingMode::Standard;
    throw DataError("unknown shooting_mode '" + s + "'");
}

ColourQuality parse_colour(const std::string& s) {
    if (s == "colour" || s == "color") return ColourQuality::Colour;
    if (s == "greyscale" || s == "grayscale") return ColourQuality::Greyscale;
    throw DataError("unknown colour '" + s + "'");
}

std::vector<std::string> lowered_strings(const nlohmann::json& arr, const char* field) {
    if (!arr.is_array()) throw DataError(std::string(field) + " must be an array of strings");
    std::vector<std::string> out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_string()) throw DataError(std::string(field) + " must contain only strings");
        std::string s = v.get<std::string>();
        std::transform(s.begin(), s.end(), s.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

ServiceRecord parse_record_json(const std::string& line, std::vector<std::string>* warnings) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const std::exception& e) {
        throw DataError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw DataError("record line must be a JSON object");

    for (const char* req : {"id", "lon", "lat", "t_start", "dir_deg"}) {
        if (!j.contains(req)) throw DataError(std::string("missing required key '") + req + "'");
    }

    ServiceRecord r;
    r.id = j.at("id").get<std::string>();
    if (r.id.empty()) throw DataError("id must be non-empty");
    r.cloud_id = j.value("cloud_id", std::string{});
    r.location.lon = j.at("lon").get<double>();
    r.location.lat = j.at("lat").get<double>();
    if (!r.location.valid())
        throw DataError("location out of range: lon=" + std::to_string(r.location.lon) +
                        " lat=" + std::to_string(r.location.lat));

    r.time.t_s = parse_rfc3339(j.at("t_start").get<std::string>());
    r.time.t_e = j.contains("t_end") ? parse_rfc3339(j.at("t_end").get<std::string>())
                                     : r.time.t_s;
    if (r.time.t_s > r.time.t_e) throw DataError("t_end precedes t_start");

    const double dir_raw = j.at("dir_deg").get<double>();
    if (!std::isfinite(dir_raw)) throw DataError("dir_deg must be finite");
    const double dir = normalize_bearing(dir_raw);
    if (dir != dir_raw && warnings)
        warnings->push_back("dir_deg " + std::to_string(dir_raw) + " normalized to " +
                            std::to_string(dir));
    r.coverage.dir_deg = dir;

    r.coverage.vis_d_m = j.value("vis_d_m", 50.0);
    if (!(r.coverage.vis_d_m > 0.0)) throw DataError("vis_d_m must be positive");
    double alpha = j.value("alpha_deg", 60.0);
    if (!(alpha > 0.0)) throw DataError("alpha_deg must be positive");
    if (alpha > 360.0) {
        if (warnings)
            warnings->push_back("alpha_deg " + std::to_string(alpha) + " clamped to 360");
        alpha = 360.0;
    }
    r.coverage.alpha_deg = alpha;

    r.shooting_mode = parse_shooting_mode(j.value("shooting_mode", std::string{"standard"}));
    r.description = j.value("description", std::string{});
    if (j.contains("tags")) r.tags = lowered_strings(j.at("tags"), "tags");

    r.quality.res_w = j.value("res_w", 1920);
    r.quality.res_h = j.value("res_h", 1080);
    if (r.quality.res_w <= 0 || r.quality.res_h <= 0)
        throw DataError("resolution components must be positive");
    r.quality.colour = parse_colour(j.value("colour", std::string{"colour"}));
    r.quality.accessible = j.value("accessible", true);
    r.quality.permanent = j.value("permanent", true);
    if (j.contains("noise_terms"))
        r.quality.noise_terms = lowered_strings(j.at("noise_terms"), "noise_terms");
    return r;
}

IngestResult ingest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open corpus file: " + path);
    IngestResult res;
    std::vector<ServiceRecord> records;
    std::vector<std::string> seen_ids;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        ++res.lines_total;
        std::vector<std::string> warnings;
        try {
            ServiceRecord r = parse_record_json(line, &warnings);
            if (std::find(seen_ids.begin(), seen_ids.end(), r.id) != seen_ids.end())
                throw DataError("duplicate record id '" + r.id + "'");
            seen_ids.push_back(r.id);
            records.push_back(std::move(r));
            for (auto& w : warnings) res.issues.push_back({lineno, false, std::move(w)});
        } catch (const DataError& e) {
            res.issues.push_back({lineno, true, e.what()});
        }
    }
    if (records.empty())
        throw DataError("corpus '" + path + "' contains no valid records (" +
                        std::to_string(res.lines_total) + " lines rejected)");
    res.records_kept = static_cast<int>(records.size());
    res.corpus = Corpus(std::move(records));
    return res;
}

std::string IngestResult::summary() const {
    std::ostringstream out;
    int rejected = 0, warned = 0;
    for (const auto& i : issues) (i.rejected ? rejected : warned)++;
    out << "ingested " << records_kept << "/" << lines_total << " records";
    if (rejected) out << ", " << rejected << " rejected";
    if (warned) out << ", " << warned << " warnings";
    return out.str();
}

std::string record_to_jsonl(const ServiceRecord& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["cloud_id"] = r.cloud_id;
    j["lon"] = r.location.lon;
    j["lat"] = r.location.lat;
    j["t_start"] = format_rfc3339(r.time.t_s);
    j["t_end"] = format_rfc3339(r.time.t_e);
    j["vis_d_m"] = r.coverage.vis_d_m;
    j["dir_deg"] = r.coverage.dir_deg.value_or(0.0);
    j["alpha_deg"] = r.coverage.alpha_deg;
    j["shooting_mode"] = shooting_mode_name(r.shooting_mode);
    j["description"] = r.description;
    j["tags"] = r.tags;
    j["res_w"] = r.quality.res_w;
    j["res_h"] = r.quality.res_h;
    j["colour"] = colour_name(r.quality.colour);
    j["accessible"] = r.quality.accessible;
    j["permanent"] = r.quality.permanent;
    j["noise_terms"] = r.quality.noise_terms;
    return j.dump();
}

void emit_corpus(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write corpus file: " + path);
    for (const auto& r : corpus.records()) out << record_to_jsonl(r) << "\n";
    if (!out) throw DataError("write failed: " + path);
}

Query parse_query_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw DataError(std::string("invalid query JSON: ") + e.what());
    }
    Query q;
    const auto& region = j.at("region");
    q.region.center.lon = region.at("lon").get<double>();
    q.region.center.lat = region.at("lat").get<double>();
    q.region.l_m = region.at("l_m").get<double>();
    q.region.w_m = region.at("w_m").get<double>();
    if (!q.region.center.valid()) throw DataError("query center out of range");
    if (!(q.region.l_m > 0.0) || !(q.region.w_m > 0.0))
        throw DataError("query region extents must be positive");
    const auto& window = j.at("window");
    q.window.t_s = parse_rfc3339(window.at("t_start").get<std::string>());
    q.window.t_e = parse_rfc3339(window.at("t_end").get<std::string>());
    if (!q.window.valid()) throw DataError("query window end precedes start");
    for (const auto& p : j.at("phrases")) {
        if (!p.is_string()) throw DataError("query phrases must be strings");
        q.phrases.push_back(p.get<std::string>());
    }
    if (q.phrases.empty()) throw DataError("query needs at least one phrase");
    return q;
}

Query load_query(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open query file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_query_json(buf.str());
}

}  // namespace socsen
