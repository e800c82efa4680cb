#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "netcf/geodesic.hpp"

namespace netcf {

using Coloring = std::map<ObjectId, int>;

// One combinatorial point class: a representative point together with the
// exact set of objects containing it. Event points (all fragment endpoints
// and all nodes) and open-interval midpoints are both sampled, so every
// containing set that occurs anywhere in the space is represented.
struct Region {
    PointOnSpace rep;
    std::vector<ObjectId> members;  // sorted
};

struct RegionDecomposition {
    std::vector<Region> regions;
};

inline RegionDecomposition decompose(const NetworkSpace& space,
                                     const std::vector<NetObject>& objects) {
    std::vector<SubtreeRegion> extents;
    extents.reserve(objects.size());
    for (const NetObject& o : objects) extents.push_back(object_extent(space, o));

    RegionDecomposition out;
    auto members_at = [&](const PointOnSpace& p) {
        std::vector<ObjectId> m;
        for (const SubtreeRegion& r : extents)
            if (r.contains_point(space, p)) m.push_back(r.id);
        std::sort(m.begin(), m.end());
        return m;
    };

    for (NodeId n : space.nodes()) {
        PointOnSpace p = PointOnSpace::at_node(n);
        out.regions.push_back({p, members_at(p)});
    }
    for (const Edge& e : space.edges()) {
        std::set<Rational> events;
        for (const SubtreeRegion& r : extents) {
            auto it = r.fragments.find(e.id);
            if (it == r.fragments.end()) continue;
            for (const Interval& iv : it->second) {
                events.insert(iv.a);
                events.insert(iv.b);
            }
        }
        events.insert(Rational(0));
        events.insert(e.length);
        std::vector<Rational> ev(events.begin(), events.end());
        for (size_t i = 0; i < ev.size(); ++i) {
            if (i > 0) {
                Rational mid = (ev[i - 1] + ev[i]) / Rational(2);
                PointOnSpace p = PointOnSpace::on_edge(e.id, mid);
                out.regions.push_back({p, members_at(p)});
            }
            if (ev[i] > Rational(0) && ev[i] < e.length) {
                PointOnSpace p = PointOnSpace::on_edge(e.id, ev[i]);
                out.regions.push_back({p, members_at(p)});
            }
        }
    }
    return out;
}

struct Verdict {
    bool ok = true;
    std::optional<PointOnSpace> witness;
    std::string message;

    explicit operator bool() const { return ok; }
};

namespace detail {

inline int color_of(const Coloring& coloring, ObjectId id) {
    auto it = coloring.find(id);
    if (it == coloring.end())
        throw std::invalid_argument("coloring is missing object " + std::to_string(id));
    return it->second;
}

}  // namespace detail

// Non-monochromatic: every point in >= 2 objects sees >= 2 colors.
inline Verdict check_nm(const NetworkSpace& space, const std::vector<NetObject>& objects,
                        const Coloring& coloring) {
    auto dec = decompose(space, objects);
    for (const Region& r : dec.regions) {
        if (r.members.size() < 2) continue;
        int first = detail::color_of(coloring, r.members.front());
        bool mono = true;
        for (ObjectId m : r.members)
            if (detail::color_of(coloring, m) != first) {
                mono = false;
                break;
            }
        if (mono)
            return {false, r.rep,
                    "monochromatic depth-" + std::to_string(r.members.size()) + " point at " +
                        r.rep.str()};
    }
    return {};
}

// Conflict-free: every covered point sees some color exactly once.
inline Verdict check_cf(const NetworkSpace& space, const std::vector<NetObject>& objects,
                        const Coloring& coloring) {
    auto dec = decompose(space, objects);
    for (const Region& r : dec.regions) {
        if (r.members.empty()) continue;
        std::map<int, int> count;
        for (ObjectId m : r.members) count[detail::color_of(coloring, m)]++;
        bool unique = false;
        for (auto& [c, k] : count)
            if (k == 1) {
                unique = true;
                break;
            }
        if (!unique) return {false, r.rep, "no uniquely colored object at " + r.rep.str()};
    }
    return {};
}

enum class Extremum { Min, Max };

// Unique-minimum / unique-maximum: the extremal color among the covering
// objects is achieved exactly once. Both imply conflict-freeness.
inline Verdict check_unique_extremum(const NetworkSpace& space,
                                     const std::vector<NetObject>& objects,
                                     const Coloring& coloring, Extremum mode) {
    auto dec = decompose(space, objects);
    for (const Region& r : dec.regions) {
        if (r.members.empty()) continue;
        std::optional<int> extreme;
        int count = 0;
        for (ObjectId m : r.members) {
            int c = detail::color_of(coloring, m);
            bool better = !extreme || (mode == Extremum::Min ? c < *extreme : c > *extreme);
            if (better) {
                extreme = c;
                count = 1;
            } else if (c == *extreme) {
                ++count;
            }
        }
        if (count != 1)
            return {false, r.rep, "extremal color repeated at " + r.rep.str()};
    }
    return {};
}

// Exact minimum palette size for the given condition, by exhaustive search
// over colorings with symmetry breaking (colors introduced in order). The
// oracle behind the paper's lower-bound constructions.
inline int min_colors_bruteforce(const NetworkSpace& space, const std::vector<NetObject>& objects,
                                 const std::string& mode, size_t limit = 12) {
    if (mode != "nm" && mode != "cf") throw std::invalid_argument("mode must be nm or cf");
    if (objects.size() > limit)
        throw std::invalid_argument("brute force limited to " + std::to_string(limit) +
                                    " objects");
    if (objects.empty()) return 0;
    bool cf = (mode == "cf");

    std::vector<ObjectId> ids;
    for (const NetObject& o : objects) ids.push_back(object_id(o));
    std::sort(ids.begin(), ids.end());
    std::map<ObjectId, int> index;
    for (size_t i = 0; i < ids.size(); ++i) index[ids[i]] = int(i);

    // distinct non-empty member sets as index vectors, keyed by last member
    auto dec = decompose(space, objects);
    std::set<std::vector<int>> hyper;
    for (const Region& r : dec.regions) {
        if (r.members.empty()) continue;
        std::vector<int> h;
        for (ObjectId m : r.members) h.push_back(index.at(m));
        hyper.insert(h);
    }
    std::vector<std::vector<std::vector<int>>> by_last(ids.size());
    for (const auto& h : hyper) by_last[h.back()].push_back(h);

    int n = int(ids.size());
    std::vector<int> color(n, -1);

    auto violates = [&](const std::vector<int>& h) {
        if (cf) {
            std::map<int, int> count;
            for (int i : h) count[color[i]]++;
            for (auto& [c, k] : count)
                if (k == 1) return false;
            return true;
        }
        if (h.size() < 2) return false;
        for (size_t i = 1; i < h.size(); ++i)
            if (color[h[i]] != color[h[0]]) return false;
        return true;
    };

    std::function<bool(int, int, int)> dfs = [&](int i, int used, int cap) -> bool {
        if (i == n) return true;
        int top = std::min(used + 1, cap);
        for (int c = 1; c <= top; ++c) {
            color[i] = c;
            bool ok = true;
            for (const auto& h : by_last[i])
                if (violates(h)) {
                    ok = false;
                    break;
                }
            if (ok && dfs(i + 1, std::max(used, c), cap)) return true;
        }
        color[i] = -1;
        return false;
    };

    for (int c = 1; c <= n; ++c)
        if (dfs(0, 0, c)) return c;
    return n;  // unreachable: n distinct colors always pass both checks
}

}  // namespace netcf
