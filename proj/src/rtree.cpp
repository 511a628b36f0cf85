#include "socsen/rtree.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "socsen/sector.hpp"

namespace socsen {

Mbr3 mbr_of(const ServiceRecord& r) {
    Sector s{r.xy, r.coverage.vis_d_m,
             r.coverage.dir_deg ? normalize_bearing(*r.coverage.dir_deg) : 0.0,
             r.coverage.alpha_deg};
    if (!r.coverage.dir_deg) s.alpha_deg = 360.0;  // no orientation: assume full disc
    Mbr3 m = polygon_bounds(sector_polygon(s));
    m.t_min = static_cast<double>(r.time.t_s);
    m.t_max = static_cast<double>(r.time.t_e);
    return m;
}

Mbr3 RTree3::Node::bounds() const {
    Mbr3 b = entries.front().box;
    for (std::size_t i = 1; i < entries.size(); ++i) b = b.merged(entries[i].box);
    return b;
}

RTree3::RTree3() : root_(std::make_unique<Node>()) {}

namespace {

double enlargement(const Mbr3& box, const Mbr3& extra) {
    return box.merged(extra).volume() - box.volume();
}

}  // namespace

std::unique_ptr<RTree3::Node> RTree3::split(Node& n) {
    // Guttman quadratic split: seed with the pair wasting the most dead
    // space, then assign by greatest preference difference.
    auto entries = std::move(n.entries);
    n.entries.clear();

    std::size_t seed_a = 0, seed_b = 1;
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            const double d = entries[i].box.merged(entries[j].box).volume() -
                             entries[i].box.volume() - entries[j].box.volume();
            if (d > worst) {
                worst = d;
                seed_a = i;
                seed_b = j;
            }
        }
    }

    auto sibling = std::make_unique<Node>();
    sibling->leaf = n.leaf;

    Mbr3 box_a = entries[seed_a].box;
    Mbr3 box_b = entries[seed_b].box;
    n.entries.push_back(std::move(entries[seed_a]));
    sibling->entries.push_back(std::move(entries[seed_b]));

    std::vector<Entry> rest;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (i != seed_a && i != seed_b) rest.push_back(std::move(entries[i]));

    std::size_t remaining = rest.size();
    std::vector<bool> used(rest.size(), false);
    while (remaining > 0) {
        // If one group must take everything left to reach the minimum, do so.
        if (n.entries.size() + remaining == kMinEntries) {
            for (std::size_t i = 0; i < rest.size(); ++i)
                if (!used[i]) {
                    box_a = box_a.merged(rest[i].box);
                    n.entries.push_back(std::move(rest[i]));
                }
            break;
        }
        if (sibling->entries.size() + remaining == kMinEntries) {
            for (std::size_t i = 0; i < rest.size(); ++i)
                if (!used[i]) {
                    box_b = box_b.merged(rest[i].box);
                    sibling->entries.push_back(std::move(rest[i]));
                }
            break;
        }

        std::size_t pick = 0;
        double best_diff = -1.0;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (used[i]) continue;
            const double diff =
                std::abs(enlargement(box_a, rest[i].box) - enlargement(box_b, rest[i].box));
            if (diff > best_diff) {
                best_diff = diff;
                pick = i;
            }
        }
        const double grow_a = enlargement(box_a, rest[pick].box);
        const double grow_b = enlargement(box_b, rest[pick].box);
        bool to_a;
        if (grow_a != grow_b)
            to_a = grow_a < grow_b;
        else if (box_a.volume() != box_b.volume())
            to_a = box_a.volume() < box_b.volume();
        else
            to_a = n.entries.size() <= sibling->entries.size();
        if (to_a) {
            box_a = box_a.merged(rest[pick].box);
            n.entries.push_back(std::move(rest[pick]));
        } else {
            box_b = box_b.merged(rest[pick].box);
            sibling->entries.push_back(std::move(rest[pick]));
        }
        used[pick] = true;
        --remaining;
    }
    return sibling;
}

bool RTree3::insert_recursive(Node& n, Entry entry, std::unique_ptr<Node>& split_out) {
    if (n.leaf) {
        n.entries.push_back(std::move(entry));
    } else {
        // Least volume enlargement, ties by smaller volume then first index.
        std::size_t pick = 0;
        double best_grow = std::numeric_limits<double>::infinity();
        double best_vol = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n.entries.size(); ++i) {
            const double grow = enlargement(n.entries[i].box, entry.box);
            const double vol = n.entries[i].box.volume();
            if (grow < best_grow || (grow == best_grow && vol < best_vol)) {
                best_grow = grow;
                best_vol = vol;
                pick = i;
            }
        }
        std::unique_ptr<Node> child_split;
        insert_recursive(*n.entries[pick].child, std::move(entry), child_split);
        n.entries[pick].box = n.entries[pick].child->bounds();
        if (child_split) {
            Entry e;
            e.box = child_split->bounds();
            e.child = std::move(child_split);
            n.entries.push_back(std::move(e));
        }
    }
    if (n.entries.size() > kMaxEntries) {
        split_out = split(n);
        return true;
    }
    return false;
}

bool RTree3::insert(const Mbr3& box, const std::string& id) {
    if (!ids_.insert(id).second) return false;
    Entry e;
    e.box = box;
    e.id = id;
    std::unique_ptr<Node> split_node;
    insert_recursive(*root_, std::move(e), split_node);
    if (split_node) {
        auto new_root = std::make_unique<Node>();
        new_root->leaf = false;
        Entry a, b;
        a.box = root_->bounds();
        a.child = std::move(root_);
        b.box = split_node->bounds();
        b.child = std::move(split_node);
        new_root->entries.push_back(std::move(a));
        new_root->entries.push_back(std::move(b));
        root_ = std::move(new_root);
    }
    ++size_;
    return true;
}

void RTree3::query_node(const Node& n, const Mbr3& region, std::vector<std::string>& out) const {
    for (const auto& e : n.entries) {
        if (!e.box.intersects(region)) continue;
        if (n.leaf)
            out.push_back(e.id);
        else
            query_node(*e.child, region, out);
    }
}

std::vector<std::string> RTree3::range_query(const Mbr3& region) const {
    std::vector<std::string> out;
    query_node(*root_, region, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::string RTree3::check_structure() const {
    std::ostringstream err;
    int leaf_depth = -1;

    auto walk = [&](auto&& self, const Node& n, int depth, bool is_root) -> void {
        if (!is_root && (n.entries.size() < kMinEntries || n.entries.size() > kMaxEntries))
            err << "fill factor violated: " << n.entries.size() << " entries\n";
        if (is_root && !n.leaf && n.entries.size() < 2)
            err << "non-leaf root with fewer than 2 entries\n";
        if (n.leaf) {
            if (leaf_depth < 0)
                leaf_depth = depth;
            else if (leaf_depth != depth)
                err << "leaf depth mismatch: " << depth << " vs " << leaf_depth << "\n";
            return;
        }
        for (const auto& e : n.entries) {
            if (!e.child) {
                err << "interior entry without child\n";
                continue;
            }
            const Mbr3 b = e.child->bounds();
            if (!e.box.contains(b)) err << "child bounds escape the parent entry box\n";
            self(self, *e.child, depth + 1, false);
        }
    };
    walk(walk, *root_, 0, true);
    return err.str();
}

RTree3 build_index(const Corpus& corpus) {
    RTree3 tree;
    for (const auto& r : corpus.records()) {
        if (!tree.insert(r)) throw InternalError("duplicate id reached the index: " + r.id);
    }
    return tree;
}

}  // namespace socsen
