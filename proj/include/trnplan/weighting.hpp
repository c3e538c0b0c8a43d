#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "trnplan/errors.hpp"
#include "trnplan/rng.hpp"
#include "trnplan/topology.hpp"

namespace trnplan {

// Per-node trust probability; 0.5 is maximal uncertainty, 1.0 fully secure.
struct ReliabilityAssignment {
    std::vector<double> values;  // indexed by NodeId

    double at(NodeId v) const { return values[static_cast<std::size_t>(v)]; }
};

// Blend factor between normalized distance and the reliability penalty.
struct WeightParams {
    double alpha = 0.5;
};

struct WeightedEdge {
    NodeId u = 0;
    NodeId v = 0;
    double weight = 0.0;
};

// Undirected graph with the blended edge costs; shares the node and edge set
// of the topology it was built from. Immutable once constructed.
class WeightedGraph {
public:
    WeightedGraph(int node_count, std::vector<WeightedEdge> edges)
        : n_(node_count), edges_(std::move(edges)), adj_(static_cast<std::size_t>(node_count)) {
        for (const WeightedEdge& e : edges_) {
            if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_ || e.u == e.v)
                throw ValidationError("bad weighted edge (" + std::to_string(e.u) + ", " +
                                      std::to_string(e.v) + ")");
            if (!(e.weight > 0.0))
                throw ValidationError("edge weight must be positive, got " +
                                      std::to_string(e.weight));
            adj_[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.weight);
            adj_[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.weight);
        }
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    }

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<WeightedEdge>& edges() const { return edges_; }
    const std::vector<std::pair<NodeId, double>>& neighbors(NodeId u) const {
        return adj_[static_cast<std::size_t>(u)];
    }
    bool contains(NodeId u) const { return u >= 0 && u < n_; }

private:
    int n_;
    std::vector<WeightedEdge> edges_;
    std::vector<std::vector<std::pair<NodeId, double>>> adj_;
};

// Blended link cost: alpha * d_norm + (1 - alpha) / (r_u * r_v). Low
// reliability inflates the cost, so shortest paths prefer trusted nodes.
inline double modified_weight(const WeightParams& p, double d_norm, double r_u, double r_v) {
    if (!(p.alpha >= 0.0 && p.alpha <= 1.0))
        throw DomainError("alpha must lie in [0, 1], got " + std::to_string(p.alpha));
    if (!(d_norm > 0.0 && d_norm <= 1.0))
        throw DomainError("normalized distance must lie in (0, 1], got " +
                          std::to_string(d_norm));
    if (!(r_u >= 0.5 && r_u <= 1.0) || !(r_v >= 0.5 && r_v <= 1.0))
        throw DomainError("reliability must lie in [0.5, 1.0], got (" + std::to_string(r_u) +
                          ", " + std::to_string(r_v) + ")");
    return p.alpha * d_norm + (1.0 - p.alpha) * (1.0 / (r_u * r_v));
}

// Applies modified_weight to every link of t under assignment r.
inline WeightedGraph build_modified_graph(const Topology& t, const ReliabilityAssignment& r,
                                          const WeightParams& p) {
    if (r.values.size() != t.nodes.size())
        throw DomainError("reliability assignment covers " + std::to_string(r.values.size()) +
                          " nodes, topology has " + std::to_string(t.nodes.size()));
    const std::vector<double> d_norm = normalize_distances(t);
    std::vector<WeightedEdge> edges;
    edges.reserve(t.links.size());
    for (std::size_t i = 0; i < t.links.size(); ++i) {
        const Link& l = t.links[i];
        WeightedEdge e;
        e.u = l.u;
        e.v = l.v;
        e.weight = modified_weight(p, d_norm[i], r.at(l.u), r.at(l.v));
        edges.push_back(e);
    }
    return WeightedGraph(t.node_count(), std::move(edges));
}

// Draws one reliability per node, uniform over [0.5, 1.0]. Each value is a
// pure function of (base_seed, trial_index, node id), so the assignment does
// not depend on evaluation order or thread schedule. Nodes with a fixed
// reliability in the topology keep it.
inline ReliabilityAssignment sample_reliabilities(const Topology& t, std::uint64_t base_seed,
                                                  std::uint64_t trial_index) {
    ReliabilityAssignment r;
    r.values.reserve(t.nodes.size());
    for (const NodeRecord& node : t.nodes) {
        if (node.reliability) {
            r.values.push_back(*node.reliability);
        } else {
            const std::uint64_t word =
                hash_words(base_seed, trial_index, static_cast<std::uint64_t>(node.id));
            r.values.push_back(0.5 + 0.5 * unit_uniform(word));
        }
    }
    return r;
}

}  // namespace trnplan
