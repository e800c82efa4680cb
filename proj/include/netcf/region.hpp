#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "netcf/space.hpp"

namespace netcf {

struct Interval {
    Rational a;
    Rational b;  // a <= b; [a,a] is a legal degenerate point

    bool contains(const Rational& x) const { return a <= x && x <= b; }
    Rational length() const { return b - a; }

    friend bool operator==(const Interval& x, const Interval& y) {
        return x.a == y.a && x.b == y.b;
    }
};

// A closed connected union of edge fragments; the exact representation of
// subtree objects and of ball extents.
struct SubtreeRegion {
    ObjectId id = -1;
    std::map<EdgeId, std::vector<Interval>> fragments;

    bool empty() const { return fragments.empty(); }

    void add_fragment(EdgeId e, Rational a, Rational b) {
        if (a > b) std::swap(a, b);
        fragments[e].push_back({std::move(a), std::move(b)});
    }

    // Sorts fragments and merges any that overlap or touch.
    void normalize() {
        for (auto it = fragments.begin(); it != fragments.end();) {
            auto& v = it->second;
            std::sort(v.begin(), v.end(), [](const Interval& x, const Interval& y) {
                return x.a != y.a ? x.a < y.a : x.b < y.b;
            });
            std::vector<Interval> merged;
            for (const Interval& iv : v) {
                if (!merged.empty() && iv.a <= merged.back().b)
                    merged.back().b = Rational::max(merged.back().b, iv.b);
                else
                    merged.push_back(iv);
            }
            v = std::move(merged);
            it = v.empty() ? fragments.erase(it) : std::next(it);
        }
    }

    bool contains_point(const NetworkSpace& space, const PointOnSpace& raw) const {
        PointOnSpace p = space.canonical(raw);
        if (!p.is_node()) {
            auto it = fragments.find(p.edge);
            if (it == fragments.end()) return false;
            for (const Interval& iv : it->second)
                if (iv.contains(p.offset)) return true;
            return false;
        }
        for (EdgeId e : space.incident_edges(p.node)) {
            auto it = fragments.find(e);
            if (it == fragments.end()) continue;
            Rational off = space.node_offset_on_edge(e, p.node);
            for (const Interval& iv : it->second)
                if (iv.contains(off)) return true;
        }
        return false;
    }

    bool contains_node(const NetworkSpace& space, NodeId n) const {
        return contains_point(space, PointOnSpace::at_node(n));
    }

    Rational total_length() const {
        Rational s(0);
        for (const auto& [e, v] : fragments)
            for (const Interval& iv : v) s += iv.length();
        return s;
    }

    // Reach of the region into edge e from endpoint n: length of the fragment
    // anchored at n, or absent if the region does not touch n on e.
    std::optional<Rational> reach_from(const NetworkSpace& space, EdgeId e, NodeId n) const {
        auto it = fragments.find(e);
        if (it == fragments.end()) return std::nullopt;
        Rational off = space.node_offset_on_edge(e, n);
        for (const Interval& iv : it->second)
            if (iv.contains(off))
                return off == iv.a ? iv.b - off : off - iv.a;
        return std::nullopt;
    }
};

// Geodesic ball B(center, radius) = { q : d(center, q) <= radius }.
struct Ball {
    ObjectId id = -1;
    PointOnSpace center;
    Rational radius;
};

using NetObject = std::variant<Ball, SubtreeRegion>;

inline ObjectId object_id(const NetObject& o) {
    return std::visit([](const auto& x) { return x.id; }, o);
}

namespace detail {

// Endpoints of fragment intervals plus the node points the region touches.
// Used for connectivity and leaf analysis.
struct RegionBoundary {
    // representative point key for union-find over fragment endpoints
    static std::string key(const NetworkSpace& space, EdgeId e, const Rational& off) {
        PointOnSpace p = space.canonical(PointOnSpace::on_edge(e, off));
        if (p.is_node()) return "n" + std::to_string(p.node);
        return "e" + std::to_string(e) + ":" + p.offset.str();
    }
};

}  // namespace detail

// True iff the (normalized) region is a single connected subset of the space.
inline bool region_is_connected(const NetworkSpace& space, const SubtreeRegion& region) {
    std::vector<std::pair<EdgeId, Interval>> frags;
    for (const auto& [e, v] : region.fragments)
        for (const Interval& iv : v) frags.emplace_back(e, iv);
    if (frags.size() <= 1) return true;

    std::vector<int> parent(frags.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = int(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };

    // Two fragments connect iff they share a point: either overlapping/touching
    // intervals on the same edge (normalization prevents those) or a common node.
    std::map<NodeId, std::vector<int>> at_node;
    for (size_t i = 0; i < frags.size(); ++i) {
        const auto& [e, iv] = frags[i];
        for (const Rational& end : {iv.a, iv.b}) {
            PointOnSpace p = space.canonical(PointOnSpace::on_edge(e, end));
            if (p.is_node()) at_node[p.node].push_back(int(i));
        }
    }
    for (const auto& [n, idxs] : at_node)
        for (size_t j = 1; j < idxs.size(); ++j) unite(idxs[0], idxs[j]);

    int root = find(0);
    for (size_t i = 1; i < frags.size(); ++i)
        if (find(int(i)) != root) return false;
    return true;
}

// Extremal points of the region: fragment endpoints covered in exactly one
// local direction. A degenerate single-point region has one leaf.
inline std::vector<PointOnSpace> region_leaf_points(const NetworkSpace& space,
                                                    const SubtreeRegion& region) {
    std::vector<PointOnSpace> out;
    std::map<NodeId, int> node_dirs;  // directions of coverage at node points
    std::vector<PointOnSpace> node_order;

    for (const auto& [e, v] : region.fragments) {
        for (const Interval& iv : v) {
            for (const Rational& end : {iv.a, iv.b}) {
                PointOnSpace p = space.canonical(PointOnSpace::on_edge(e, end));
                if (p.is_node()) {
                    if (node_dirs.find(p.node) == node_dirs.end()) node_order.push_back(p);
                    // degenerate node-point fragment covers zero directions
                    node_dirs[p.node] += (iv.a == iv.b) ? 0 : 1;
                } else if (iv.a == iv.b) {
                    out.push_back(p);  // isolated interior point
                    break;             // count once
                } else {
                    out.push_back(p);  // interior endpoint: one open direction
                }
            }
        }
    }
    for (const PointOnSpace& p : node_order)
        if (node_dirs[p.node] <= 1) out.push_back(p);
    return out;
}

inline int region_leaf_count(const NetworkSpace& space, const SubtreeRegion& region) {
    return int(region_leaf_points(space, region).size());
}

// Intersection of a region with one edge interval; used for clipping.
inline std::vector<Interval> intersect_on_edge(const std::vector<Interval>& frags,
                                               const Interval& window) {
    std::vector<Interval> out;
    for (const Interval& iv : frags) {
        Rational lo = Rational::max(iv.a, window.a);
        Rational hi = Rational::min(iv.b, window.b);
        if (lo <= hi) out.push_back({lo, hi});
    }
    return out;
}

}  // namespace netcf
