#pragma once

#include <random>

#include "netcf/bounds.hpp"
#include "netcf/surgery.hpp"

namespace netcf {

struct Instance {
    NetworkSpace space;
    std::vector<NetObject> objects;
};

namespace genutil {

// std::mt19937_64 output is fully specified by the standard; the distributions
// are not, so everything below samples through these helpers.
inline long long pick(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline Rational pick_len(std::mt19937_64& rng) {
    return Rational(pick(rng, 1, 8), pick(rng, 1, 4));
}

inline Rational pick_fraction(std::mt19937_64& rng) {  // in [0, 1]
    long long den = pick(rng, 1, 8);
    return Rational(pick(rng, 0, den), den);
}

inline PointOnSpace pick_point(std::mt19937_64& rng, const NetworkSpace& space) {
    const Edge& e = space.edges()[size_t(pick(rng, 0, (long long)space.edges().size() - 1))];
    return space.canonical(PointOnSpace::on_edge(e.id, pick_fraction(rng) * e.length));
}

}  // namespace genutil

// Star with k leaves; object T_i is the union of hub-leaf edges of the pairs
// {i,j}, so every two objects share a private leaf and all m of them need
// distinct colors in any NM-coloring.
inline Instance gen_star_pairs(int k, int l, int n) {
    if (k < 1 || l < 1 || n < 1) throw std::invalid_argument("gen_star_pairs: bad parameters");
    int m = nm_trees_lower_bound(k, l, n);

    NetworkSpace space = [&] {
        if (k == 1)
            return NetworkSpace(SpaceKind::Tree, {0, 1}, {{1, 0, 1, Rational(1)}});
        if (k == 2)  // degree-2 hub smoothed into one edge; hub sits at offset 1
            return NetworkSpace(SpaceKind::Tree, {1, 2}, {{1, 1, 2, Rational(2)}});
        std::vector<NodeId> nodes{0};
        std::vector<Edge> edges;
        for (int i = 1; i <= k; ++i) {
            nodes.push_back(i);
            edges.push_back({i, 0, i, Rational(1)});
        }
        return NetworkSpace(SpaceKind::Tree, std::move(nodes), std::move(edges));
    }();

    std::vector<NetObject> objects;
    std::vector<std::vector<int>> leaves_of(m + 1);
    int next_leaf = 1;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            leaves_of[i].push_back(next_leaf);
            leaves_of[j].push_back(next_leaf);
            ++next_leaf;
        }

    for (int i = 1; i <= m; ++i) {
        SubtreeRegion t;
        t.id = i;
        if (leaves_of[i].empty()) {
            // m == 1: a single degenerate object at the hub
            EdgeId e = space.edges().front().id;
            Rational hub = (k == 2) ? Rational(1) : Rational(0);
            t.add_fragment(e, hub, hub);
        }
        for (int leaf : leaves_of[i]) {
            if (k == 2) {
                // merged edge 1 -- 2 of length 2 with the hub at offset 1
                if (leaf == 1)
                    t.add_fragment(1, Rational(0), Rational(1));
                else
                    t.add_fragment(1, Rational(1), Rational(2));
            } else {
                t.add_fragment(leaf, Rational(0), Rational(1));
            }
        }
        t.normalize();
        objects.emplace_back(std::move(t));
    }
    return {std::move(space), std::move(objects)};
}

// Root-to-leaf paths of a complete binary tree of height h = floor(log2
// min(k,n)). The degree-2 root is smoothed into a top edge of length 2 whose
// midpoint is the root; for h <= 1 the instance degenerates to a single
// point-path as in the paper's induction base.
inline Instance gen_binary_tree_paths(int k, int n) {
    if (k < 1 || n < 1) throw std::invalid_argument("gen_binary_tree_paths: bad parameters");
    int h = floor_log2(std::min(k, n));

    if (h <= 1) {
        NetworkSpace space(SpaceKind::Tree, {0, 1}, {{0, 0, 1, Rational(2)}});
        SubtreeRegion path;
        path.id = 1;
        path.add_fragment(0, Rational(1), Rational(1));
        return {std::move(space), {NetObject(path)}};
    }

    // level-1 nodes get ids 1 and 2; deeper levels follow breadth-first
    std::vector<NodeId> nodes;
    std::vector<Edge> edges;
    EdgeId next_edge = 1;
    std::vector<std::vector<NodeId>> level(h + 1);
    NodeId next_node = 1;
    for (int d = 1; d <= h; ++d)
        for (int i = 0; i < (1 << d); ++i) {
            level[d].push_back(next_node);
            nodes.push_back(next_node++);
        }
    const EdgeId top_edge = 0;
    edges.push_back({top_edge, level[1][0], level[1][1], Rational(2)});
    std::map<NodeId, EdgeId> up_edge;
    for (int d = 1; d < h; ++d)
        for (int i = 0; i < (1 << d); ++i)
            for (int c = 0; c < 2; ++c) {
                NodeId child = level[d + 1][2 * i + c];
                edges.push_back({next_edge, level[d][i], child, Rational(1)});
                up_edge[child] = next_edge++;
            }
    NetworkSpace space(SpaceKind::Tree, std::move(nodes), std::move(edges));

    std::vector<NetObject> objects;
    for (int i = 0; i < (1 << h); ++i) {
        SubtreeRegion path;
        path.id = i + 1;
        NodeId cur = level[h][i];
        for (int d = h; d > 1; --d) {
            EdgeId e = up_edge.at(cur);
            path.add_fragment(e, Rational(0), space.edge(e).length);
            cur = space.other_endpoint(e, cur);
        }
        // half of the top edge, from this side's level-1 node to the midpoint
        if (cur == level[1][0])
            path.add_fragment(top_edge, Rational(0), Rational(1));
        else
            path.add_fragment(top_edge, Rational(1), Rational(2));
        path.normalize();
        objects.emplace_back(std::move(path));
    }
    return {std::move(space), std::move(objects)};
}

// The comb: a unit-spaced spine of t+2 points with teeth of length t+2, and
// t+1 balls of radius t+2 centered at spine offsets i + 2/3. The two
// degree-2 spine endpoints are merged into the adjoining tooth edges.
inline Instance gen_comb(int t) {
    if (t < 0) throw std::invalid_argument("gen_comb: t must be >= 0");
    Rational tooth_len(t + 2);
    std::vector<NodeId> nodes;
    std::vector<Edge> edges;
    auto spine_id = [&](int i) { return NodeId(i - 1); };       // i in 2..t+1
    auto tip_id = [&](int i) { return NodeId(t + i); };         // i in 1..t+2

    for (int i = 2; i <= t + 1; ++i) nodes.push_back(spine_id(i));
    for (int i = 1; i <= t + 2; ++i) nodes.push_back(tip_id(i));

    std::vector<NetObject> balls;
    if (t == 0) {
        edges.push_back({0, tip_id(1), tip_id(2), tooth_len + Rational(1) + tooth_len});
        NetworkSpace space(SpaceKind::Tree, std::move(nodes), std::move(edges));
        space.set_coord(tip_id(1), 1, t + 2);
        space.set_coord(tip_id(2), 2, t + 2);
        Ball b{1, PointOnSpace::on_edge(0, tooth_len + Rational(2, 3)), tooth_len};
        balls.emplace_back(b);
        return {std::move(space), std::move(balls)};
    }

    // edge 0: tip_1 down tooth 1 and along the spine to p_2
    edges.push_back({0, tip_id(1), spine_id(2), tooth_len + Rational(1)});
    for (int i = 2; i <= t; ++i)  // spine edges p_i -- p_{i+1}
        edges.push_back({EdgeId(i - 1), spine_id(i), spine_id(i + 1), Rational(1)});
    // edge t: p_{t+1} along the spine to p_{t+2} and up tooth t+2
    edges.push_back({EdgeId(t), spine_id(t + 1), tip_id(t + 2), Rational(1) + tooth_len});
    for (int i = 2; i <= t + 1; ++i)  // interior teeth
        edges.push_back({EdgeId(t + i - 1), spine_id(i), tip_id(i), tooth_len});

    NetworkSpace space(SpaceKind::Tree, std::move(nodes), std::move(edges));
    for (int i = 2; i <= t + 1; ++i) space.set_coord(spine_id(i), i, 0);
    for (int i = 1; i <= t + 2; ++i) space.set_coord(tip_id(i), i, t + 2);

    for (int i = 1; i <= t + 1; ++i) {
        // center c_i sits 2/3 past spine point p_i
        PointOnSpace center = (i == 1)
                                  ? PointOnSpace::on_edge(0, tooth_len + Rational(2, 3))
                                  : PointOnSpace::on_edge(EdgeId(i - 1), Rational(2, 3));
        balls.emplace_back(Ball{i, center, tooth_len});
    }
    return {std::move(space), std::move(balls)};
}

// K4 with unit edges and one ball per node.
inline Instance gen_k4(const Rational& radius) {
    std::vector<Edge> edges;
    EdgeId id = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) edges.push_back({id++, i, j, Rational(1)});
    NetworkSpace space(SpaceKind::Planar, {0, 1, 2, 3}, std::move(edges));
    space.set_coord(0, 0, 0);
    space.set_coord(1, 2, 0);
    space.set_coord(2, 1, 1.7);
    space.set_coord(3, 1, 0.6);
    std::vector<NetObject> balls;
    for (int i = 0; i < 4; ++i)
        balls.emplace_back(Ball{i + 1, PointOnSpace::at_node(i), radius});
    return {std::move(space), std::move(balls)};
}

// Random tree space with exactly k leaves (and a random number of internal
// nodes compatible with the no-degree-2 rule).
inline NetworkSpace gen_random_tree_space(int k, std::mt19937_64& rng) {
    using genutil::pick;
    if (k < 2) k = 2;
    if (k == 2) return NetworkSpace(SpaceKind::Tree, {0, 1}, {{0, 0, 1, genutil::pick_len(rng)}});

    int m = int(pick(rng, 1, k - 2));  // internal nodes; m + 2 <= k keeps degrees >= 3
    std::vector<NodeId> nodes;
    std::vector<Edge> edges;
    EdgeId next_edge = 0;
    for (int i = 0; i < m; ++i) {
        nodes.push_back(i);
        if (i > 0) edges.push_back({next_edge++, NodeId(pick(rng, 0, i - 1)), i, genutil::pick_len(rng)});
    }
    std::vector<int> want(m, 3);
    for (const Edge& e : edges) {
        --want[e.u];
        --want[e.v];
    }
    int leaf = m;
    std::vector<int> hosts;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < want[i]; ++j) hosts.push_back(i);
    while (int(hosts.size()) < k) hosts.push_back(int(pick(rng, 0, m - 1)));
    for (int host : hosts) {
        nodes.push_back(leaf);
        edges.push_back({next_edge++, host, leaf++, genutil::pick_len(rng)});
    }
    return NetworkSpace(SpaceKind::Tree, std::move(nodes), std::move(edges));
}

// Random connected subtree with at most l leaves: the union of geodesic paths
// from an anchor point to at most max(1, l-1) targets.
inline SubtreeRegion gen_random_subtree(const NetworkSpace& space, int l, ObjectId id,
                                        std::mt19937_64& rng) {
    using genutil::pick;
    PointOnSpace anchor = genutil::pick_point(rng, space);
    int targets = int(pick(rng, 1, std::max(1, l - 1)));
    SubtreeRegion region;
    region.id = id;
    for (int i = 0; i < targets; ++i) {
        SubtreeRegion leg = tree_path_region(space, anchor, genutil::pick_point(rng, space));
        for (auto& [e, frags] : leg.fragments)
            for (const Interval& iv : frags) region.add_fragment(e, iv.a, iv.b);
    }
    if (l <= 1) {  // degenerate single-point object
        region.fragments.clear();
        SubtreeRegion dot = tree_path_region(space, anchor, anchor);
        region.fragments = dot.fragments;
    }
    region.normalize();
    return region;
}

inline Instance gen_random_tree_subtrees(int k, int l, int n, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    NetworkSpace space = gen_random_tree_space(k, rng);
    std::vector<NetObject> objects;
    for (int i = 1; i <= n; ++i) {
        SubtreeRegion t = gen_random_subtree(space, l, i, rng);
        int tries = 0;
        while (region_leaf_count(space, t) > std::max(l, 2) && tries++ < 20)
            t = gen_random_subtree(space, l, i, rng);
        objects.emplace_back(std::move(t));
    }
    return {std::move(space), std::move(objects)};
}

inline Ball gen_random_ball(const NetworkSpace& space, ObjectId id, std::mt19937_64& rng) {
    using genutil::pick;
    Rational scale(0);
    for (const Edge& e : space.edges()) scale = Rational::max(scale, e.length);
    Rational radius = genutil::pick_fraction(rng) * scale * Rational(pick(rng, 0, 3));
    return Ball{id, genutil::pick_point(rng, space), radius};
}

// Random tree with roughly t internal nodes, plus n random balls.
inline Instance gen_random_tree_balls(int t, int n, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    if (t < 0) t = 0;
    NetworkSpace space = [&] {
        if (t == 0) return NetworkSpace(SpaceKind::Tree, {0, 1}, {{0, 0, 1, genutil::pick_len(rng) * Rational(4)}});
        // grow a backbone of t internal nodes, then top up degrees with leaves
        std::vector<NodeId> nodes;
        std::vector<Edge> edges;
        EdgeId next_edge = 0;
        for (int i = 0; i < t; ++i) {
            nodes.push_back(i);
            if (i > 0)
                edges.push_back({next_edge++, NodeId(genutil::pick(rng, 0, i - 1)), i,
                                 genutil::pick_len(rng)});
        }
        std::vector<int> want(t, 3);
        for (const Edge& e : edges) {
            --want[e.u];
            --want[e.v];
        }
        int extra = int(genutil::pick(rng, 0, 3));
        NodeId leaf = t;
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < want[i]; ++j) {
                nodes.push_back(leaf);
                edges.push_back({next_edge++, i, leaf++, genutil::pick_len(rng)});
            }
        for (int j = 0; j < extra; ++j) {
            NodeId host = NodeId(genutil::pick(rng, 0, t - 1));
            nodes.push_back(leaf);
            edges.push_back({next_edge++, host, leaf++, genutil::pick_len(rng)});
        }
        return NetworkSpace(SpaceKind::Tree, std::move(nodes), std::move(edges));
    }();
    std::vector<NetObject> balls;
    for (int i = 1; i <= n; ++i) balls.emplace_back(gen_random_ball(space, i, rng));
    return {std::move(space), std::move(balls)};
}

// Random planar space: a stacked triangulation (repeatedly inserting a node
// into a random face) followed by random edge deletions that preserve
// connectivity and the no-degree-2 rule. Optionally a few pendant leaves.
inline NetworkSpace gen_random_planar_space(int t, std::mt19937_64& rng) {
    using genutil::pick;
    if (t < 3) t = 3;
    struct Tri {
        NodeId a, b, c;
    };
    std::vector<NodeId> nodes{0, 1, 2};
    struct RawEdge {
        NodeId u, v;
    };
    std::vector<RawEdge> raw{{0, 1}, {0, 2}, {1, 2}};
    std::vector<Tri> faces{{0, 1, 2}};
    std::map<NodeId, std::pair<double, double>> pos{
        {0, {0.0, 0.0}}, {1, {10.0, 0.0}}, {2, {5.0, 9.0}}};

    for (NodeId m = 3; m < t; ++m) {
        size_t f = size_t(pick(rng, 0, (long long)faces.size() - 1));
        Tri tri = faces[f];
        faces.erase(faces.begin() + long(f));
        nodes.push_back(m);
        raw.push_back({tri.a, m});
        raw.push_back({tri.b, m});
        raw.push_back({tri.c, m});
        faces.push_back({tri.a, tri.b, m});
        faces.push_back({tri.a, tri.c, m});
        faces.push_back({tri.b, tri.c, m});
        pos[m] = {(pos[tri.a].first + pos[tri.b].first + pos[tri.c].first) / 3.0,
                  (pos[tri.a].second + pos[tri.b].second + pos[tri.c].second) / 3.0};
    }

    // random deletions, keeping the graph connected and degrees off 2
    std::map<NodeId, int> deg;
    for (const RawEdge& e : raw) {
        deg[e.u]++;
        deg[e.v]++;
    }
    auto connected_without = [&](size_t skip) {
        std::map<NodeId, std::vector<NodeId>> adj;
        for (size_t i = 0; i < raw.size(); ++i) {
            if (i == skip) continue;
            adj[raw[i].u].push_back(raw[i].v);
            adj[raw[i].v].push_back(raw[i].u);
        }
        std::set<NodeId> seen{nodes.front()};
        std::vector<NodeId> stack{nodes.front()};
        while (!stack.empty()) {
            NodeId x = stack.back();
            stack.pop_back();
            for (NodeId y : adj[x])
                if (seen.insert(y).second) stack.push_back(y);
        }
        return seen.size() == nodes.size();
    };
    int deletions = int(pick(rng, 0, (long long)raw.size() / 4));
    for (int d = 0; d < deletions && raw.size() > nodes.size(); ++d) {
        size_t cand = size_t(pick(rng, 0, (long long)raw.size() - 1));
        if (deg[raw[cand].u] <= 3 || deg[raw[cand].v] <= 3) continue;  // would create degree 2
        if (!connected_without(cand)) continue;
        deg[raw[cand].u]--;
        deg[raw[cand].v]--;
        raw.erase(raw.begin() + long(cand));
    }

    // a few pendant leaves
    int pend = int(pick(rng, 0, 2));
    NodeId leaf = t;
    for (int i = 0; i < pend; ++i) {
        NodeId host = NodeId(pick(rng, 0, t - 1));
        nodes.push_back(leaf);
        raw.push_back({host, leaf});
        pos[leaf] = {pos[host].first + 0.5, pos[host].second + 0.7};
        ++leaf;
    }

    std::vector<Edge> edges;
    EdgeId id = 0;
    for (const RawEdge& e : raw) edges.push_back({id++, e.u, e.v, genutil::pick_len(rng)});
    NetworkSpace space(SpaceKind::Planar, std::move(nodes), std::move(edges));
    for (auto& [n, xy] : pos) space.set_coord(n, xy.first, xy.second);
    return space;
}

inline Instance gen_random_planar_balls(int t, int n, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    NetworkSpace space = gen_random_planar_space(t, rng);
    std::vector<NetObject> balls;
    for (int i = 1; i <= n; ++i) balls.emplace_back(gen_random_ball(space, i, rng));
    return {std::move(space), std::move(balls)};
}

}  // namespace netcf
