#include "socsen/record.hpp"

#include <algorithm>

namespace socsen {

Corpus::Corpus(std::vector<ServiceRecord> records) : records_(std::move(records)) {
    std::sort(records_.begin(), records_.end(),
              [](const ServiceRecord& a, const ServiceRecord& b) { return a.id < b.id; });
    by_id_.reserve(records_.size());
    for (std::uint32_t i = 0; i < records_.size(); ++i) {
        auto [it, fresh] = by_id_.emplace(records_[i].id, i);
        if (!fresh) throw DataError("duplicate record id: " + records_[i].id);
    }
    if (!records_.empty()) {
        origin_ = records_.front().location;
        for (auto& r : records_) r.xy = project(r.location, origin_);
    }
}

std::uint32_t Corpus::index_of(const std::string& id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) throw DataError("unknown record id: " + id);
    return it->second;
}

}  // namespace socsen
