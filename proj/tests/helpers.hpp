#pragma once

#include <random>

#include "netcf/assignment.hpp"
#include "netcf/geodesic.hpp"
#include "netcf/space.hpp"
#include "netcf/surgery.hpp"

namespace netcf::testing {

inline NetworkSpace single_edge_space(Rational len, EdgeId eid = 0) {
    return NetworkSpace(SpaceKind::Tree, {0, 1}, {{eid, 0, 1, std::move(len)}});
}

// Hub node 0, leaves 1..k, edge i goes hub -> leaf i with offset 0 at the hub.
inline NetworkSpace star_space(int k, Rational edge_len = Rational(1)) {
    std::vector<NodeId> nodes{0};
    std::vector<Edge> edges;
    for (int i = 1; i <= k; ++i) {
        nodes.push_back(i);
        edges.push_back({i, 0, i, edge_len});
    }
    return NetworkSpace(SpaceKind::Tree, std::move(nodes), std::move(edges));
}

// Two-edge path a(0) - b(1) - c(2); degree-2 middle node, so only legal as a
// tolerant (subspace-style) space.
inline NetworkSpace two_edge_path(Rational len_ab, Rational len_bc) {
    return NetworkSpace(SpaceKind::Tree, {0, 1, 2},
                        {{0, 0, 1, std::move(len_ab)}, {1, 1, 2, std::move(len_bc)}},
                        /*allow_degree_le2=*/true);
}

inline NetworkSpace k4_space(Rational edge_len = Rational(1)) {
    std::vector<Edge> edges;
    EdgeId id = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) edges.push_back({id++, i, j, edge_len});
    return NetworkSpace(SpaceKind::Planar, {0, 1, 2, 3}, std::move(edges));
}

// Deterministic helpers on top of the raw engine; std::uniform_int_distribution
// is implementation-defined, so tests and generators avoid it.
inline long long rand_range(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline Rational rand_rational(std::mt19937_64& rng, long long max_num, long long max_den = 4) {
    long long den = rand_range(rng, 1, max_den);
    long long num = rand_range(rng, 0, max_num * den);
    return Rational(num, den);
}

inline PointOnSpace rand_point(std::mt19937_64& rng, const NetworkSpace& space) {
    const auto& edges = space.edges();
    const Edge& e = edges[size_t(rand_range(rng, 0, (long long)edges.size() - 1))];
    Rational off = rand_rational(rng, 1) * e.length;  // in [0, len]
    return space.canonical(PointOnSpace::on_edge(e.id, off));
}

}  // namespace netcf::testing
