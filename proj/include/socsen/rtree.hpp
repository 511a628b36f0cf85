#pragma once

#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "socsen/geo.hpp"
#include "socsen/record.hpp"

namespace socsen {

/// Spatio-temporal bounding box of a record: the axis-aligned bounds of its
/// coverage sector polygon plus its time interval.
Mbr3 mbr_of(const ServiceRecord& r);

/// Insert-only 3D R-tree over (x, y, t) boxes keyed by record id.
/// Guttman quadratic split. Build single-threaded, then share freely for
/// concurrent queries.
class RTree3 {
public:
    static constexpr int kMaxEntries = 16;  // M
    static constexpr int kMinEntries = 6;   // m

    RTree3();

    /// False (and no mutation) if the id is already present.
    bool insert(const Mbr3& box, const std::string& id);
    bool insert(const ServiceRecord& r) { return insert(mbr_of(r), r.id); }

    /// Ids of all entries whose box intersects `region` (closed intervals:
    /// boundary touch counts). Sorted ascending for determinism.
    std::vector<std::string> range_query(const Mbr3& region) const;

    std::size_t size() const { return size_; }
    bool contains(const std::string& id) const { return ids_.count(id) != 0; }

    /// Structural diagnostics for tests: containment of child boxes, fill
    /// factors and uniform leaf depth. Returns an empty string when sound.
    std::string check_structure() const;

private:
    struct Node;
    struct Entry {
        Mbr3 box;
        std::string id;               // leaf payload
        std::unique_ptr<Node> child;  // interior payload
    };
    struct Node {
        bool leaf{true};
        std::vector<Entry> entries;
        Mbr3 bounds() const;
    };

    Node* choose_leaf(Node* n, const Mbr3& box);
    /// Splits an overflowing node in place; returns the newly created sibling.
    std::unique_ptr<Node> split(Node& n);
    bool insert_recursive(Node& n, Entry entry, std::unique_ptr<Node>& split_out);
    void query_node(const Node& n, const Mbr3& region, std::vector<std::string>& out) const;

    std::unique_ptr<Node> root_;
    std::unordered_set<std::string> ids_;
    std::size_t size_{0};
};

/// Convenience: full-corpus index.
RTree3 build_index(const Corpus& corpus);

}  // namespace socsen
