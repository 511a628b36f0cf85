#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "socsen/geo.hpp"

namespace socsen {

/// Thrown for malformed inputs (maps to the CLI's data-error exit code).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown for internal invariant violations (maps to the internal exit code).
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ShootingMode : std::uint8_t { Square, Video, Panorama, Standard };
enum class ColourQuality : std::uint8_t { Colour, Greyscale };

/// Camera coverage sector: apex at the record location, radius vis_d,
/// central angle alpha about bearing dir (clockwise from true north).
/// dir is absent for records ingested without orientation metadata; such
/// records are quarantined by the clustering stage.
struct Coverage {
    double vis_d_m{50.0};
    std::optional<double> dir_deg{};
    double alpha_deg{60.0};
};

struct QualityAttrs {
    int res_w{1920};
    int res_h{1080};
    ColourQuality colour{ColourQuality::Colour};
    bool accessible{true};
    bool permanent{true};
    std::vector<std::string> noise_terms;

    std::int64_t pixels() const {
        return static_cast<std::int64_t>(res_w) * static_cast<std::int64_t>(res_h);
    }
};

/// One social-sensor image abstracted as a service. No pixels, metadata only.
struct ServiceRecord {
    std::string id;
    std::string cloud_id;
    GeoPoint location;
    TimeInterval time;
    Coverage coverage;
    ShootingMode shooting_mode{ShootingMode::Standard};
    std::string description;
    std::vector<std::string> tags;  // normalized to lower case at ingest
    QualityAttrs quality;

    /// Derived by the semantics stage; empty until then.
    std::vector<std::string> keywords;

    /// Projected position, filled once the record joins a Corpus.
    Vec2 xy{};
};

/// Query region: center plus horizontal/vertical half-extents in meters.
struct QueryRegion {
    GeoPoint center;
    double l_m{0};
    double w_m{0};
};

struct Query {
    QueryRegion region;
    TimeInterval window;
    std::vector<std::string> phrases;
};

/// An immutable, id-sorted snapshot of service records sharing one
/// projection origin. Build it once, then share freely across threads.
class Corpus {
public:
    Corpus() = default;

    /// Sorts records by id, fixes the projection origin to the first
    /// record's location and projects every record against it.
    /// Throws DataError on duplicate ids.
    explicit Corpus(std::vector<ServiceRecord> records);

    const std::vector<ServiceRecord>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }
    bool empty() const { return records_.empty(); }
    GeoPoint origin() const { return origin_; }

    const ServiceRecord& at(std::uint32_t idx) const { return records_.at(idx); }

    /// Index of a record by id; throws DataError if absent.
    std::uint32_t index_of(const std::string& id) const;
    bool has(const std::string& id) const { return by_id_.count(id) != 0; }

    /// Fills the derived keyword list of one record. Only the semantics
    /// stage calls this, single-threaded, before the corpus is shared.
    void set_keywords(std::uint32_t idx, std::vector<std::string> keywords) {
        records_.at(idx).keywords = std::move(keywords);
    }

private:
    std::vector<ServiceRecord> records_;
    std::unordered_map<std::string, std::uint32_t> by_id_;
    GeoPoint origin_;
};

}  // namespace socsen
