#pragma once

#include "netcf/geodesic.hpp"

namespace netcf {

struct AssignedBall {
    ObjectId ball = -1;
    Rational cov;
};

// Per node x, the ball maximizing cov_x; ties broken by smallest ball id.
// Nodes contained in no ball are absent.
struct BallAssignment {
    std::map<NodeId, AssignedBall> at;

    bool has(NodeId n) const { return at.count(n) > 0; }
    ObjectId ball_at(NodeId n) const { return at.at(n).ball; }
};

inline BallAssignment assign_balls(const NetworkSpace& space, const std::vector<Ball>& balls) {
    {
        std::set<ObjectId> ids;
        for (const Ball& b : balls)
            if (!ids.insert(b.id).second)
                throw std::invalid_argument("duplicate ball id " + std::to_string(b.id));
    }
    BallAssignment out;
    std::vector<std::map<NodeId, Rational>> dists;
    dists.reserve(balls.size());
    for (const Ball& b : balls) dists.push_back(node_distances(space, b.center));

    for (NodeId n : space.nodes()) {
        std::optional<AssignedBall> best;
        for (size_t i = 0; i < balls.size(); ++i) {
            auto it = dists[i].find(n);
            if (it == dists[i].end()) continue;
            Rational cov = balls[i].radius - it->second;
            if (cov < Rational(0)) continue;
            if (!best || cov > best->cov || (cov == best->cov && balls[i].id < best->ball))
                best = AssignedBall{balls[i].id, cov};
        }
        if (best) out.at[n] = *best;
    }
    return out;
}

// The core: balls assigned to at least one node. With `internal_only` the
// witnesses are restricted to internal nodes (the tree CF and planar CF
// recursions count only those).
inline std::set<ObjectId> assigned_core(const NetworkSpace& space, const std::vector<Ball>& balls,
                                        const BallAssignment& assignment, bool internal_only) {
    std::set<ObjectId> core;
    for (const auto& [n, ab] : assignment.at)
        if (!internal_only || space.is_internal(n)) core.insert(ab.ball);
    (void)balls;
    return core;
}

}  // namespace netcf
