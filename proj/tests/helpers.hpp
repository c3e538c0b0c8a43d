#pragma once

// Shared graph builders and randomized-input generators for the test suites.

#include <set>
#include <utility>
#include <vector>

#include "trnplan/rng.hpp"
#include "trnplan/topology.hpp"
#include "trnplan/weighting.hpp"

namespace trnplan::testing {

inline WeightedGraph make_graph(int n, const std::vector<std::tuple<NodeId, NodeId, double>>& edges) {
    std::vector<WeightedEdge> es;
    es.reserve(edges.size());
    for (const auto& [u, v, w] : edges) es.push_back(WeightedEdge{u, v, w});
    return WeightedGraph(n, std::move(es));
}

// Path a(0) - b(1) - c(2) with unit weights.
inline WeightedGraph path3() {
    return make_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}});
}

// 4-cycle 0-1-2-3-0, unit weights.
inline WeightedGraph cycle4() {
    return make_graph(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {0, 3, 1.0}});
}

// Star with center 0 and `leaves` leaves, unit weights.
inline WeightedGraph star(int leaves) {
    std::vector<std::tuple<NodeId, NodeId, double>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i, 1.0);
    return make_graph(leaves + 1, edges);
}

// Random connected weighted graph: a random spanning tree plus extra edges,
// weights uniform in [w_min, w_max]. Random weights keep path lengths
// tie-free almost surely.
inline WeightedGraph random_connected_graph(SplitMix64& rng, int n, double extra_edge_prob,
                                            double w_min = 0.1, double w_max = 2.0) {
    std::set<std::pair<NodeId, NodeId>> edge_set;
    for (NodeId v = 1; v < n; ++v) {
        const NodeId u = static_cast<NodeId>(rng.next_below(static_cast<std::uint64_t>(v)));
        edge_set.emplace(std::min(u, v), std::max(u, v));
    }
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (rng.next_unit() < extra_edge_prob) edge_set.emplace(u, v);
    std::vector<WeightedEdge> edges;
    edges.reserve(edge_set.size());
    for (const auto& [u, v] : edge_set)
        edges.push_back(WeightedEdge{u, v, w_min + (w_max - w_min) * rng.next_unit()});
    return WeightedGraph(n, std::move(edges));
}

// Random valid topology via the bundled generator.
inline Topology random_topology(SplitMix64& rng, int n_min = 5, int n_max = 12) {
    const int n = n_min + static_cast<int>(rng.next_below(
                              static_cast<std::uint64_t>(n_max - n_min + 1)));
    const int max_links = n * (n - 1) / 2;
    const int span = std::min(max_links, n + 6) - n;
    const int m = n + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(span + 1)));
    return generate_topology(TopologyModel::ring_chords, n, m, rng.next());
}

// Applies a node relabeling: perm[old] = new.
inline WeightedGraph permute_graph(const WeightedGraph& g, const std::vector<NodeId>& perm) {
    std::vector<WeightedEdge> edges;
    edges.reserve(g.edges().size());
    for (const WeightedEdge& e : g.edges()) {
        const NodeId u = perm[static_cast<std::size_t>(e.u)];
        const NodeId v = perm[static_cast<std::size_t>(e.v)];
        edges.push_back(WeightedEdge{std::min(u, v), std::max(u, v), e.weight});
    }
    return WeightedGraph(g.node_count(), std::move(edges));
}

}  // namespace trnplan::testing
