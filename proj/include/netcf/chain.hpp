#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <vector>

#include "netcf/region.hpp"

namespace netcf {

struct ChainInterval {
    ObjectId id = -1;
    Rational lo;
    Rational hi;  // lo <= hi; degenerate points allowed
};

namespace detail {

// Left-to-right order: by left endpoint, longest first on ties, then by id.
inline std::vector<ChainInterval> chain_order(std::vector<ChainInterval> items) {
    std::sort(items.begin(), items.end(), [](const ChainInterval& x, const ChainInterval& y) {
        if (x.lo != y.lo) return x.lo < y.lo;
        if (x.hi != y.hi) return x.hi > y.hi;
        return x.id < y.id;
    });
    return items;
}

}  // namespace detail

// The non-monochromatic chain method: colors 0 (blue) and 1 (red). Intervals
// are taken in left-to-right order and colored with the active color; the
// active color flips exactly when the right endpoint of the interval just
// colored lies in no other already colored interval.
inline std::map<ObjectId, int> nm_chain(const std::vector<ChainInterval>& intervals) {
    auto order = detail::chain_order(intervals);
    std::map<ObjectId, int> colors;
    std::vector<const ChainInterval*> done;
    int active = 0;
    for (const ChainInterval& cur : order) {
        colors[cur.id] = active;
        bool covered = false;
        for (const ChainInterval* j : done)
            if (j->lo <= cur.hi && cur.hi <= j->hi) {
                covered = true;
                break;
            }
        if (!covered) active ^= 1;
        done.push_back(&cur);
    }
    return colors;
}

// The conflict-free chain method: colors 0 (blue), 1 (red), 2 (grey/dummy).
// Builds chains of alternating blue/red intervals; intervals fully covered by
// colored non-grey intervals become grey; uncovered leftovers restart the
// procedure to the right.
inline std::map<ObjectId, int> cf_chain(const std::vector<ChainInterval>& intervals) {
    auto order = detail::chain_order(intervals);
    std::map<ObjectId, int> colors;
    std::vector<bool> taken(order.size(), false);
    std::vector<size_t> chain_members;  // indices colored blue/red so far

    auto covered_by_chains = [&](const ChainInterval& iv) {
        // merge the non-grey colored intervals and test closed containment
        std::vector<std::pair<Rational, Rational>> segs;
        for (size_t j : chain_members) segs.push_back({order[j].lo, order[j].hi});
        std::sort(segs.begin(), segs.end());
        Rational cur_lo, cur_hi;
        bool open = false;
        for (auto& [lo, hi] : segs) {
            if (open && lo <= cur_hi) {
                cur_hi = Rational::max(cur_hi, hi);
            } else {
                if (open && cur_lo <= iv.lo && iv.hi <= cur_hi) return true;
                cur_lo = lo;
                cur_hi = hi;
                open = true;
            }
        }
        return open && cur_lo <= iv.lo && iv.hi <= cur_hi;
    };

    size_t remaining = order.size();
    size_t scan = 0;
    while (remaining > 0) {
        while (taken[scan]) ++scan;  // leftmost uncolored, already in chain order
        size_t last = scan;
        taken[last] = true;
        --remaining;
        colors[order[last].id] = 0;
        chain_members.push_back(last);
        int last_color = 0;

        while (true) {
            // among intervals starting inside the last one and not contained in
            // it, take the one extending farthest right
            int best = -1;
            for (size_t j = 0; j < order.size(); ++j) {
                if (taken[j]) continue;
                const ChainInterval& cand = order[j];
                if (cand.lo < order[last].lo || cand.lo > order[last].hi) continue;
                if (cand.hi <= order[last].hi) continue;  // contained
                if (best < 0 || cand.hi > order[best].hi ||
                    (cand.hi == order[best].hi && cand.id < order[best].id))
                    best = int(j);
            }
            if (best < 0) break;
            last = size_t(best);
            taken[last] = true;
            --remaining;
            last_color ^= 1;
            colors[order[last].id] = last_color;
            chain_members.push_back(last);
        }

        for (size_t j = 0; j < order.size(); ++j) {
            if (taken[j]) continue;
            if (covered_by_chains(order[j])) {
                taken[j] = true;
                --remaining;
                colors[order[j].id] = 2;
            }
        }
        // whatever remains lies completely to the right of the colored chains
    }
    return colors;
}

}  // namespace netcf
