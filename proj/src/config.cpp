#include "socsen/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "socsen/corpus_io.hpp"
#include "socsen/record.hpp"

namespace socsen {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v, double lo, double hi) {
    std::size_t pos = 0;
    double d;
    try {
        d = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw DataError("config key '" + key + "': cannot parse number '" + v + "'");
    }
    if (pos != v.size()) throw DataError("config key '" + key + "': trailing junk in '" + v + "'");
    if (d < lo || d > hi)
        throw DataError("config key '" + key + "': value " + v + " outside [" +
                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return d;
}

int parse_int(const std::string& key, const std::string& v, int lo, int hi) {
    return static_cast<int>(parse_double(key, v, lo, hi));
}

}  // namespace

void EngineConfig::set(const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    const double big = 1e18;
    if (key == "delta_m") delta_m = parse_double(key, v, 1e-9, big);
    else if (key == "lambda_s") lambda_s = parse_double(key, v, 0.0, big);
    else if (key == "Delta_m") Delta_m = parse_double(key, v, 1e-9, big);
    else if (key == "theta") theta = parse_double(key, v, 0.0, 1.0);
    else if (key == "Lambda_s") Lambda_s = parse_double(key, v, 0.0, big);
    else if (key == "vartheta_deg") vartheta_deg = parse_double(key, v, 0.0, 360.0);
    else if (key == "top_n") top_n = parse_int(key, v, 1, 1000);
    else if (key == "grid_g") grid_g = parse_int(key, v, 1, 16);
    else if (key == "br_margin") br_margin = parse_double(key, v, 1e-9, 1e6);
    else if (key == "max_per_cluster") max_per_cluster = parse_int(key, v, 0, 100000);
    else if (key == "window_policy") {
        if (v == "lambda_scaled") window_policy = WindowPolicy::LambdaScaled;
        else if (v == "explicit") window_policy = WindowPolicy::Explicit;
        else throw DataError("config key 'window_policy': expected lambda_scaled or explicit");
    } else if (key == "window_t1") window_t1 = parse_rfc3339(v);
    else if (key == "window_t2") window_t2 = parse_rfc3339(v);
    else if (key == "engine") {
        if (v == "local") engine = EngineKind::Local;
        else if (v == "remote") engine = EngineKind::Remote;
        else throw DataError("config key 'engine': expected local or remote");
    } else if (key == "synonyms") synonyms_path = v;
    else if (key == "remote_host") remote_host = v;
    else if (key == "remote_port") remote_port = parse_int(key, v, 1, 65535);
    else if (key == "remote_path") remote_path = v;
    else if (key == "remote_timeout_ms") remote_timeout_ms = parse_int(key, v, 1, 3600000);
    else if (key == "remote_retries") remote_retries = parse_int(key, v, 0, 100);
    else throw DataError("unknown config key: " + key);
}

TimeInterval EngineConfig::search_window(TimeInterval query_window) const {
    if (window_policy == WindowPolicy::Explicit) {
        if (window_t1 > window_t2) throw DataError("explicit search window has t1 > t2");
        return {window_t1, window_t2};
    }
    const auto pad = static_cast<std::int64_t>(Lambda_s);
    return {query_window.t_s - pad, query_window.t_e + pad};
}

EngineConfig EngineConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open config file: " + path);
    EngineConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw DataError("config line " + std::to_string(lineno) + ": expected key = value");
        try {
            cfg.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
        } catch (const DataError& e) {
            throw DataError("config line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return cfg;
}

}  // namespace socsen
