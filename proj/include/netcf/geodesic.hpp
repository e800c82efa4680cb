#pragma once

#include <map>
#include <queue>
#include <tuple>

#include "netcf/region.hpp"

namespace netcf {

// Exact single-source shortest path distances from a point to every node.
// An interior source is handled by seeding both endpoints of its edge, which
// is equivalent to inserting it as a temporary degree-2 subdivision vertex.
inline std::map<NodeId, Rational> node_distances(const NetworkSpace& space,
                                                 const PointOnSpace& from_raw) {
    PointOnSpace from = space.canonical(from_raw);
    std::map<NodeId, Rational> dist;
    using QItem = std::pair<Rational, NodeId>;
    auto cmp = [](const QItem& a, const QItem& b) {
        return a.first != b.first ? a.first > b.first : a.second > b.second;
    };
    std::priority_queue<QItem, std::vector<QItem>, decltype(cmp)> pq(cmp);

    auto seed = [&](NodeId n, Rational d) {
        auto it = dist.find(n);
        if (it == dist.end() || d < it->second) {
            dist[n] = d;
            pq.push({d, n});
        }
    };
    if (from.is_node()) {
        seed(from.node, Rational(0));
    } else {
        const Edge& e = space.edge(from.edge);
        seed(e.u, from.offset);
        seed(e.v, e.length - from.offset);
    }
    while (!pq.empty()) {
        auto [d, n] = pq.top();
        pq.pop();
        if (dist[n] < d) continue;
        for (EdgeId eid : space.incident_edges(n)) {
            const Edge& e = space.edge(eid);
            seed(space.other_endpoint(eid, n), d + e.length);
        }
    }
    return dist;
}

inline Rational geodesic_distance(const NetworkSpace& space, const PointOnSpace& p_raw,
                                  const PointOnSpace& q_raw) {
    PointOnSpace p = space.canonical(p_raw);
    PointOnSpace q = space.canonical(q_raw);
    if (p == q) return Rational(0);

    auto dist = node_distances(space, p);
    if (q.is_node()) return dist.at(q.node);

    const Edge& e = space.edge(q.edge);
    Rational best = dist.at(e.u) + q.offset;
    best = Rational::min(best, dist.at(e.v) + (e.length - q.offset));
    if (!p.is_node() && p.edge == q.edge)
        best = Rational::min(best, (p.offset - q.offset).abs());
    return best;
}

// The closed region of all points within `radius` of the center, as edge
// fragments, computed by shortest-path relaxation from the center. Every
// interior point of an edge is reached through one of its endpoints or, on
// the center's own edge, directly.
inline SubtreeRegion ball_extent(const NetworkSpace& space, const Ball& ball) {
    if (ball.radius < Rational(0))
        throw std::invalid_argument("ball radius must be >= 0");
    PointOnSpace c = space.canonical(ball.center);
    auto dist = node_distances(space, c);

    SubtreeRegion region;
    region.id = ball.id;
    const Rational& r = ball.radius;
    for (const Edge& e : space.edges()) {
        auto du = dist.find(e.u);
        auto dv = dist.find(e.v);
        if (du != dist.end() && du->second <= r)
            region.add_fragment(e.id, Rational(0), Rational::min(e.length, r - du->second));
        if (dv != dist.end() && dv->second <= r)
            region.add_fragment(e.id, Rational::max(Rational(0), e.length - (r - dv->second)),
                                e.length);
        if (!c.is_node() && c.edge == e.id)
            region.add_fragment(e.id, Rational::max(Rational(0), c.offset - r),
                                Rational::min(e.length, c.offset + r));
    }
    region.normalize();
    return region;
}

// cov_x(B) = r - d(center, x); absent when x is outside the ball.
inline std::optional<Rational> coverage(const NetworkSpace& space, const Ball& ball, NodeId x) {
    Rational d = geodesic_distance(space, ball.center, PointOnSpace::at_node(x));
    Rational cov = ball.radius - d;
    if (cov < Rational(0)) return std::nullopt;
    return cov;
}

// Extent of any colorable object as a normalized region.
inline SubtreeRegion object_extent(const NetworkSpace& space, const NetObject& obj) {
    if (std::holds_alternative<Ball>(obj)) return ball_extent(space, std::get<Ball>(obj));
    SubtreeRegion r = std::get<SubtreeRegion>(obj);
    r.normalize();
    return r;
}

// Node sequence of a shortest p -> q path (tree spaces have a unique one).
inline std::vector<NodeId> shortest_path_nodes(const NetworkSpace& space,
                                               const PointOnSpace& p_raw,
                                               const PointOnSpace& q_raw) {
    PointOnSpace p = space.canonical(p_raw);
    PointOnSpace q = space.canonical(q_raw);
    auto dist = node_distances(space, p);
    Rational total = geodesic_distance(space, p, q);

    // Walk back from q: repeatedly pick a node whose distance certifies the
    // remaining budget, preferring smaller ids for determinism.
    std::vector<NodeId> out;
    Rational remaining = total;
    NodeId cur = -1;
    if (q.is_node()) {
        cur = q.node;
    } else {
        const Edge& e = space.edge(q.edge);
        if (!p.is_node() && p.edge == q.edge && (p.offset - q.offset).abs() == total)
            return {};  // direct along one edge, no intermediate nodes
        if (dist.count(e.u) && dist.at(e.u) + q.offset == total) {
            cur = e.u;
            remaining = dist.at(e.u);
        } else {
            cur = e.v;
            remaining = dist.at(e.v);
        }
    }
    while (true) {
        out.push_back(cur);
        if (dist.at(cur) != remaining)
            throw std::logic_error("shortest path reconstruction drifted");
        if (p.is_node() && cur == p.node) break;
        if (!p.is_node()) {
            const Edge& pe = space.edge(p.edge);
            if ((cur == pe.u && remaining == p.offset) ||
                (cur == pe.v && remaining == pe.length - p.offset))
                break;
        }
        NodeId next = -1;
        for (EdgeId eid : space.incident_edges(cur)) {
            const Edge& e = space.edge(eid);
            NodeId m = space.other_endpoint(eid, cur);
            if (dist.count(m) && dist.at(m) + e.length == remaining) {
                next = m;
                remaining = dist.at(m);
                break;
            }
        }
        if (next < 0) throw std::logic_error("shortest path reconstruction stuck");
        cur = next;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

// The unique p -> q path of a tree space as a region (used to build subtree
// objects and to trim them).
inline SubtreeRegion tree_path_region(const NetworkSpace& space, const PointOnSpace& p_raw,
                                      const PointOnSpace& q_raw) {
    PointOnSpace p = space.canonical(p_raw);
    PointOnSpace q = space.canonical(q_raw);
    SubtreeRegion region;

    auto add_point = [&](const PointOnSpace& x) {
        if (x.is_node()) {
            EdgeId e = space.incident_edges(x.node).front();
            Rational off = space.node_offset_on_edge(e, x.node);
            region.add_fragment(e, off, off);
        } else {
            region.add_fragment(x.edge, x.offset, x.offset);
        }
    };

    if (p == q) {
        add_point(p);
        region.normalize();
        return region;
    }
    std::vector<NodeId> nodes = shortest_path_nodes(space, p, q);
    if (nodes.empty()) {
        // both interior to the same edge
        region.add_fragment(p.edge, Rational::min(p.offset, q.offset),
                            Rational::max(p.offset, q.offset));
        region.normalize();
        return region;
    }
    if (!p.is_node())
        region.add_fragment(p.edge, p.offset, space.node_offset_on_edge(p.edge, nodes.front()));
    if (!q.is_node())
        region.add_fragment(q.edge, q.offset, space.node_offset_on_edge(q.edge, nodes.back()));
    for (size_t i = 0; i + 1 < nodes.size(); ++i) {
        for (EdgeId eid : space.incident_edges(nodes[i])) {
            if (space.other_endpoint(eid, nodes[i]) == nodes[i + 1]) {
                region.add_fragment(eid, Rational(0), space.edge(eid).length);
                break;
            }
        }
    }
    if (region.empty()) add_point(p);
    region.normalize();
    return region;
}

}  // namespace netcf
