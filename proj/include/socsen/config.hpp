#pragma once

#include <optional>
#include <string>

#include "socsen/geo.hpp"

namespace socsen {

enum class EngineKind : std::uint8_t { Local, Remote };

/// How the related-cluster search window (t_1, t_2) is derived.
enum class WindowPolicy : std::uint8_t {
    LambdaScaled,  // query window expanded by Lambda on both sides
    Explicit,      // window_t1 / window_t2 as given
};

/// Tunable thresholds and pipeline settings, with the defaults the engine
/// ships with. File format: flat `key = value` lines, `#` comments.
struct EngineConfig {
    double delta_m{20.0};             // clustering spatial radius
    double lambda_s{0.0};             // clustering temporal radius (0: same stamp)
    double Delta_m{20.0};             // composability geo-distance threshold
    double theta{0.5};                // semantic similarity threshold
    double Lambda_s{900.0};           // composability temporal threshold
    double vartheta_deg{45.0};        // composability direction threshold
    int top_n{5};                     // keywords compared per cluster
    int grid_g{3};                    // tapestry frame grid size
    double br_margin{1.25};           // bounded-region scale per side
    int max_per_cluster{0};           // records selected per cluster; 0 = grid_g^2
    WindowPolicy window_policy{WindowPolicy::LambdaScaled};
    std::int64_t window_t1{0};        // used when window_policy == Explicit
    std::int64_t window_t2{0};
    EngineKind engine{EngineKind::Local};
    std::string synonyms_path;        // empty: engine runs without a dictionary
    std::string remote_host{"127.0.0.1"};
    int remote_port{8080};
    std::string remote_path{"/similarity"};
    int remote_timeout_ms{2000};
    int remote_retries{2};

    /// Applies one `key = value` assignment; throws DataError on unknown
    /// keys or unparsable/out-of-range values.
    void set(const std::string& key, const std::string& value);

    /// Effective per-cluster selection cap.
    int select_cap() const { return max_per_cluster > 0 ? max_per_cluster : grid_g * grid_g; }

    /// Related-cluster search window for a query window.
    TimeInterval search_window(TimeInterval query_window) const;

    static EngineConfig load(const std::string& path);
};

}  // namespace socsen
