#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "netcf/rational.hpp"

namespace netcf {

using NodeId = int;
using EdgeId = int;
using ObjectId = int;

enum class SpaceKind { Tree, Planar };

struct Edge {
    EdgeId id = -1;
    NodeId u = -1;
    NodeId v = -1;
    Rational length;
};

// A location on the space: either a node, or an interior point of an edge at
// `offset` from the edge's u endpoint. Canonical form maps offsets 0 and
// length(e) to the node variant, so equality is syntactic.
struct PointOnSpace {
    NodeId node = -1;
    EdgeId edge = -1;
    Rational offset;

    bool is_node() const { return edge < 0; }

    static PointOnSpace at_node(NodeId n) {
        PointOnSpace p;
        p.node = n;
        return p;
    }
    static PointOnSpace on_edge(EdgeId e, Rational off) {
        PointOnSpace p;
        p.edge = e;
        p.offset = std::move(off);
        return p;
    }

    friend bool operator==(const PointOnSpace& a, const PointOnSpace& b) {
        if (a.is_node() != b.is_node()) return false;
        if (a.is_node()) return a.node == b.node;
        return a.edge == b.edge && a.offset == b.offset;
    }

    std::string str() const {
        if (is_node()) return "node(" + std::to_string(node) + ")";
        return "edge(" + std::to_string(edge) + ")@" + offset.str();
    }
};

// A metric graph. Nodes of degree 2 are rejected at the top level (degree-1
// nodes are leaves, degree >= 3 internal); subspaces produced by surgery set
// `allow_degree_le2` since splitting reintroduces low-degree copies.
class NetworkSpace {
public:
    NetworkSpace() = default;

    NetworkSpace(SpaceKind kind, std::vector<NodeId> nodes, std::vector<Edge> edges,
                 bool allow_degree_le2 = false)
        : kind_(kind), nodes_(std::move(nodes)), edges_(std::move(edges)),
          allow_degree_le2_(allow_degree_le2) {
        build_index();
        validate();
    }

    SpaceKind kind() const { return kind_; }
    bool is_tree() const { return kind_ == SpaceKind::Tree; }
    bool degree_le2_allowed() const { return allow_degree_le2_; }

    const std::vector<NodeId>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_node(NodeId n) const { return adjacency_.count(n) > 0; }
    bool has_edge(EdgeId e) const { return edge_index_.count(e) > 0; }

    const Edge& edge(EdgeId e) const {
        auto it = edge_index_.find(e);
        if (it == edge_index_.end())
            throw std::invalid_argument("unknown edge id " + std::to_string(e));
        return edges_[it->second];
    }

    const std::vector<EdgeId>& incident_edges(NodeId n) const {
        auto it = adjacency_.find(n);
        if (it == adjacency_.end())
            throw std::invalid_argument("unknown node id " + std::to_string(n));
        return it->second;
    }

    int degree(NodeId n) const { return int(incident_edges(n).size()); }
    bool is_leaf(NodeId n) const { return degree(n) == 1; }
    bool is_internal(NodeId n) const { return degree(n) >= 3; }

    std::vector<NodeId> leaves() const {
        std::vector<NodeId> out;
        for (NodeId n : nodes_)
            if (is_leaf(n)) out.push_back(n);
        return out;
    }
    std::vector<NodeId> internal_nodes() const {
        std::vector<NodeId> out;
        for (NodeId n : nodes_)
            if (is_internal(n)) out.push_back(n);
        return out;
    }

    // k and t in the paper's parameterization.
    int leaf_count() const { return int(leaves().size()); }
    int internal_count() const { return int(internal_nodes().size()); }

    NodeId other_endpoint(EdgeId e, NodeId n) const {
        const Edge& ed = edge(e);
        if (ed.u == n) return ed.v;
        if (ed.v == n) return ed.u;
        throw std::invalid_argument("node not an endpoint of edge");
    }

    Rational node_offset_on_edge(EdgeId e, NodeId n) const {
        const Edge& ed = edge(e);
        if (ed.u == n) return Rational(0);
        if (ed.v == n) return ed.length;
        throw std::invalid_argument("node not an endpoint of edge");
    }

    // Normalizes boundary offsets to the node variant and checks validity.
    PointOnSpace canonical(const PointOnSpace& p) const {
        if (p.is_node()) {
            if (!has_node(p.node))
                throw std::invalid_argument("invalid point: unknown node " + std::to_string(p.node));
            return p;
        }
        const Edge& ed = edge(p.edge);
        if (p.offset < Rational(0) || p.offset > ed.length)
            throw std::invalid_argument("invalid point: offset " + p.offset.str() +
                                        " outside edge " + std::to_string(p.edge));
        if (p.offset == Rational(0)) return PointOnSpace::at_node(ed.u);
        if (p.offset == ed.length) return PointOnSpace::at_node(ed.v);
        return p;
    }

    // Export-only drawing hints; never used by any algorithm.
    const std::map<NodeId, std::pair<double, double>>& coords() const { return coords_; }
    void set_coord(NodeId n, double x, double y) { coords_[n] = {x, y}; }

private:
    void build_index() {
        std::sort(nodes_.begin(), nodes_.end());
        if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end())
            throw std::invalid_argument("duplicate node id");
        for (NodeId n : nodes_) adjacency_[n];
        for (size_t i = 0; i < edges_.size(); ++i) {
            const Edge& e = edges_[i];
            if (!edge_index_.emplace(e.id, i).second)
                throw std::invalid_argument("duplicate edge id " + std::to_string(e.id));
            if (!adjacency_.count(e.u) || !adjacency_.count(e.v))
                throw std::invalid_argument("edge endpoint is not a node");
            adjacency_[e.u].push_back(e.id);
            if (e.v != e.u) adjacency_[e.v].push_back(e.id);
        }
        for (auto& [n, inc] : adjacency_) std::sort(inc.begin(), inc.end());
    }

    void validate() const {
        if (nodes_.empty()) throw std::invalid_argument("space has no nodes");
        for (const Edge& e : edges_)
            if (e.length <= Rational(0))
                throw std::invalid_argument("edge " + std::to_string(e.id) +
                                            " has non-positive length");
        if (!allow_degree_le2_) {
            for (NodeId n : nodes_)
                if (degree(n) == 2)
                    throw std::invalid_argument("node " + std::to_string(n) +
                                                " has degree 2");
        }
        // connectivity
        std::set<NodeId> seen;
        std::vector<NodeId> stack{nodes_.front()};
        seen.insert(nodes_.front());
        while (!stack.empty()) {
            NodeId n = stack.back();
            stack.pop_back();
            for (EdgeId e : incident_edges(n)) {
                NodeId m = other_endpoint(e, n);
                if (seen.insert(m).second) stack.push_back(m);
            }
        }
        if (seen.size() != nodes_.size())
            throw std::invalid_argument("space is not connected");
        if (kind_ == SpaceKind::Tree && edges_.size() + 1 != nodes_.size())
            throw std::invalid_argument("tree space must have |E| = |V| - 1");
    }

    SpaceKind kind_ = SpaceKind::Tree;
    std::vector<NodeId> nodes_;
    std::vector<Edge> edges_;
    bool allow_degree_le2_ = false;
    std::map<NodeId, std::vector<EdgeId>> adjacency_;
    std::map<EdgeId, size_t> edge_index_;
    std::map<NodeId, std::pair<double, double>> coords_;
};

}  // namespace netcf
