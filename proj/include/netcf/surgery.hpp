#pragma once

#include "netcf/assignment.hpp"

namespace netcf {

// Closures of the connected components of space \ {r}. Node and edge ids are
// stable so object fragments can be clipped against a component directly; the
// copy of r in each component may have low degree, which is tolerated there.
inline std::vector<NetworkSpace> split_at_node(const NetworkSpace& space, NodeId r) {
    if (!space.has_node(r) || !space.is_internal(r))
        throw std::invalid_argument("split_at_node: node " + std::to_string(r) +
                                    " is not an internal node");
    std::set<EdgeId> visited;
    std::vector<NetworkSpace> out;
    for (EdgeId start : space.incident_edges(r)) {
        if (visited.count(start)) continue;
        // collect the component reachable through `start` without crossing r
        std::set<EdgeId> comp_edges{start};
        std::set<NodeId> comp_nodes{r, space.other_endpoint(start, r)};
        std::vector<NodeId> stack;
        if (space.other_endpoint(start, r) != r) stack.push_back(space.other_endpoint(start, r));
        while (!stack.empty()) {
            NodeId n = stack.back();
            stack.pop_back();
            for (EdgeId e : space.incident_edges(n)) {
                NodeId m = space.other_endpoint(e, n);
                if (m == r) {
                    comp_edges.insert(e);  // another edge back into r joins this component
                    continue;
                }
                if (comp_edges.insert(e).second && comp_nodes.insert(m).second)
                    stack.push_back(m);
                else
                    comp_nodes.insert(m);
            }
        }
        visited.insert(comp_edges.begin(), comp_edges.end());
        std::vector<Edge> edges;
        for (const Edge& e : space.edges())
            if (comp_edges.count(e.id)) edges.push_back(e);
        out.emplace_back(space.kind(), std::vector<NodeId>(comp_nodes.begin(), comp_nodes.end()),
                         std::move(edges), /*allow_degree_le2=*/true);
    }
    return out;
}

// The two closed components of a tree space minus the open edge e = uv,
// returned in (u side, v side) order. The interior of e belongs to neither.
inline std::pair<NetworkSpace, NetworkSpace> split_at_edge(const NetworkSpace& space, EdgeId eid) {
    if (!space.is_tree()) throw std::invalid_argument("split_at_edge requires a tree space");
    const Edge& cut = space.edge(eid);

    auto side = [&](NodeId anchor) {
        std::set<NodeId> nodes{anchor};
        std::vector<NodeId> stack{anchor};
        std::vector<Edge> edges;
        while (!stack.empty()) {
            NodeId n = stack.back();
            stack.pop_back();
            for (EdgeId e : space.incident_edges(n)) {
                if (e == eid) continue;
                NodeId m = space.other_endpoint(e, n);
                if (nodes.insert(m).second) {
                    stack.push_back(m);
                    edges.push_back(space.edge(e));
                }
            }
        }
        std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
        return NetworkSpace(space.kind(), std::vector<NodeId>(nodes.begin(), nodes.end()),
                            std::move(edges), /*allow_degree_le2=*/true);
    };
    return {side(cut.u), side(cut.v)};
}

inline bool point_in_subspace(const NetworkSpace& sub, const PointOnSpace& p_raw) {
    if (p_raw.is_node()) return sub.has_node(p_raw.node);
    if (sub.has_edge(p_raw.edge)) return true;
    // boundary offsets may canonicalize to a node the subspace still has
    return false;
}

// Restriction of a ball to a subspace produced by surgery on `space`. A ball
// centered inside the subspace is unchanged; otherwise it behaves within the
// subspace as a ball centered at the cut node u with radius cov_u(B).
inline Ball clip_ball_to_subspace(const NetworkSpace& space, const NetworkSpace& sub,
                                  const Ball& ball) {
    PointOnSpace c = space.canonical(ball.center);
    if (point_in_subspace(sub, c)) return ball;

    std::optional<NodeId> cut;
    Rational best;
    auto dist = node_distances(space, c);
    for (NodeId n : sub.nodes()) {
        auto it = dist.find(n);
        if (it == dist.end()) continue;
        if (!cut || it->second < best || (it->second == best && n < *cut)) {
            cut = n;
            best = it->second;
        }
    }
    if (!cut || ball.radius < best)
        throw std::invalid_argument("clip_ball_to_subspace: ball does not reach the subspace");
    Ball out;
    out.id = ball.id;
    out.center = PointOnSpace::at_node(*cut);
    out.radius = ball.radius - best;
    return out;
}

}  // namespace netcf
