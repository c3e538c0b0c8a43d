#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "trnplan/centrality.hpp"
#include "trnplan/errors.hpp"
#include "trnplan/placement.hpp"
#include "trnplan/weighting.hpp"

namespace trnplan {

// Whether a path's endpoints can count as covering nodes. Repeaters relay
// between endpoints, so by default only interior nodes count.
enum class EndpointMode { interior_only, include_endpoints };

// Which graph carries the paths: the reliability trials of the ranking
// protocol, or a single pure-distance graph (alpha = 1).
enum class CpcGraphMode { trials, distance };

enum class CpcMethod { composite, degree };

inline std::string to_string(CpcMethod m) {
    return m == CpcMethod::composite ? "composite" : "degree";
}

// One canonical shortest path per unordered node pair.
class PathTable {
public:
    PathTable(int node_count, std::vector<std::vector<NodeId>> paths)
        : n_(node_count), paths_(std::move(paths)) {}

    int node_count() const { return n_; }
    std::size_t pair_count() const {
        return static_cast<std::size_t>(n_) * (n_ - 1) / 2;
    }

    // Triangular index of the unordered pair (s, t), s < t.
    std::size_t pair_index(NodeId s, NodeId t) const {
        const auto si = static_cast<std::size_t>(s);
        const auto ti = static_cast<std::size_t>(t);
        return si * static_cast<std::size_t>(n_) - si * (si + 1) / 2 + (ti - si - 1);
    }

    const std::vector<NodeId>& path(NodeId s, NodeId t) const {
        return paths_[pair_index(std::min(s, t), std::max(s, t))];
    }

    const std::vector<std::vector<NodeId>>& paths() const { return paths_; }

private:
    int n_;
    std::vector<std::vector<NodeId>> paths_;
};

// Builds the canonical shortest path for every pair: among tied predecessors
// the backward walk from t always follows the smallest node id, which makes
// the selection deterministic and matches single-path provisioning.
inline PathTable canonical_paths(const WeightedGraph& g) {
    const int n = g.node_count();
    std::vector<std::vector<NodeId>> paths(static_cast<std::size_t>(n) * (n - 1) / 2);
    std::size_t idx = 0;
    for (NodeId s = 0; s < n; ++s) {
        const ShortestPathTree tree = dijkstra_sssp(g, s);
        for (NodeId t = s + 1; t < n; ++t, ++idx) {
            std::vector<NodeId> path;
            NodeId cur = t;
            while (cur != s) {
                path.push_back(cur);
                const auto& preds = tree.preds[static_cast<std::size_t>(cur)];
                cur = *std::min_element(preds.begin(), preds.end());
            }
            path.push_back(s);
            std::reverse(path.begin(), path.end());
            paths[idx] = std::move(path);
        }
    }
    return PathTable(n, std::move(paths));
}

// Percentage of pairs whose canonical path contains at least one node of
// trns, with containment governed by mode.
inline double cpc(const PathTable& paths, const std::vector<NodeId>& trns,
                  EndpointMode mode = EndpointMode::interior_only) {
    const int n = paths.node_count();
    std::vector<char> is_trn(static_cast<std::size_t>(n), 0);
    for (NodeId v : trns) {
        if (v < 0 || v >= n) throw NodeNotFound("TRN id " + std::to_string(v));
        is_trn[static_cast<std::size_t>(v)] = 1;
    }
    std::size_t covered = 0;
    for (const auto& path : paths.paths()) {
        const std::size_t begin = mode == EndpointMode::interior_only ? 1 : 0;
        const std::size_t end =
            mode == EndpointMode::interior_only ? path.size() - 1 : path.size();
        for (std::size_t i = begin; i < end; ++i) {
            if (is_trn[static_cast<std::size_t>(path[i])]) {
                ++covered;
                break;
            }
        }
    }
    return 100.0 * static_cast<double>(covered) / static_cast<double>(paths.pair_count());
}

struct CpcPoint {
    int k = 0;
    double coverage_pct = 0.0;
};

struct CpcCurve {
    CpcMethod method = CpcMethod::composite;
    std::vector<CpcPoint> points;  // k = 1..k_max
};

namespace detail {

// Per-pair smallest ranking position (0-based) of any covering node, or
// npos when the path has no covering node.
inline constexpr std::size_t kNeverCovered = static_cast<std::size_t>(-1);

inline std::vector<std::size_t> rank_positions(const std::vector<NodeId>& order, int n) {
    std::vector<std::size_t> pos(static_cast<std::size_t>(n), kNeverCovered);
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[static_cast<std::size_t>(order[i])] = i;
    return pos;
}

// covered[k-1] = number of pairs covered by the top k nodes of the order.
inline std::vector<std::int64_t> coverage_counts(const PathTable& paths,
                                                 const std::vector<std::size_t>& rank_pos,
                                                 int k_max, EndpointMode mode) {
    std::vector<std::int64_t> hist(static_cast<std::size_t>(k_max), 0);
    for (const auto& path : paths.paths()) {
        const std::size_t begin = mode == EndpointMode::interior_only ? 1 : 0;
        const std::size_t end =
            mode == EndpointMode::interior_only ? path.size() - 1 : path.size();
        std::size_t best = kNeverCovered;
        for (std::size_t i = begin; i < end; ++i)
            best = std::min(best, rank_pos[static_cast<std::size_t>(path[i])]);
        if (best < static_cast<std::size_t>(k_max)) ++hist[best];
    }
    std::vector<std::int64_t> covered(static_cast<std::size_t>(k_max), 0);
    std::int64_t running = 0;
    for (int k = 0; k < k_max; ++k) {
        running += hist[static_cast<std::size_t>(k)];
        covered[static_cast<std::size_t>(k)] = running;
    }
    return covered;
}

// Shared curve evaluation for one or more selection orders over the same
// trial stream. Covered-pair counts are integers, so their sums are exact
// and independent of the reduction schedule.
inline std::vector<CpcCurve> cpc_curves_for_orders(
    const Topology& t, const std::vector<std::vector<NodeId>>& orders,
    const std::vector<CpcMethod>& methods, int k_max, const ScoreParams& eval,
    EndpointMode endpoint_mode, CpcGraphMode graph_mode, int threads) {
    validate_score_params(eval);
    const int n = t.node_count();
    if (k_max < 1 || k_max > n)
        throw DomainError("k_max must lie in [1, " + std::to_string(n) + "], got " +
                          std::to_string(k_max));

    std::vector<std::vector<std::size_t>> positions;
    positions.reserve(orders.size());
    for (const auto& order : orders) positions.push_back(rank_positions(order, n));

    std::vector<CpcCurve> curves(orders.size());
    for (std::size_t o = 0; o < orders.size(); ++o) curves[o].method = methods[o];

    if (graph_mode == CpcGraphMode::distance) {
        // Single evaluation on the alpha = 1 graph; reliabilities are inert.
        const ReliabilityAssignment ones{std::vector<double>(static_cast<std::size_t>(n), 1.0)};
        const WeightedGraph g = build_modified_graph(t, ones, WeightParams{1.0});
        const PathTable paths = canonical_paths(g);
        for (std::size_t o = 0; o < orders.size(); ++o) {
            const auto covered = coverage_counts(paths, positions[o], k_max, endpoint_mode);
            for (int k = 1; k <= k_max; ++k) {
                const double pct = 100.0 * static_cast<double>(covered[k - 1]) /
                                   static_cast<double>(paths.pair_count());
                curves[o].points.push_back(CpcPoint{k, pct});
            }
        }
        return curves;
    }

    const int trials = eval.trials;
    std::vector<std::vector<std::vector<std::int64_t>>> counts(
        orders.size(),
        std::vector<std::vector<std::int64_t>>(static_cast<std::size_t>(trials)));
    run_trials(trials, threads, [&](int trial) {
        const ReliabilityAssignment r =
            sample_reliabilities(t, eval.base_seed, static_cast<std::uint64_t>(trial));
        const WeightedGraph g = build_modified_graph(t, r, eval.alpha);
        const PathTable paths = canonical_paths(g);
        for (std::size_t o = 0; o < orders.size(); ++o)
            counts[o][static_cast<std::size_t>(trial)] =
                coverage_counts(paths, positions[o], k_max, endpoint_mode);
    });

    const std::size_t pair_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    for (std::size_t o = 0; o < orders.size(); ++o) {
        for (int k = 1; k <= k_max; ++k) {
            std::int64_t total = 0;
            for (int i = 0; i < trials; ++i)
                total += counts[o][static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1)];
            const double pct = 100.0 * static_cast<double>(total) /
                               (static_cast<double>(trials) * static_cast<double>(pair_count));
            curves[o].points.push_back(CpcPoint{k, pct});
        }
    }
    return curves;
}

}  // namespace detail

// Coverage of the ranking's top K for K = 1..k_max, averaged over the same
// deterministic reliability trial stream the ranking was built from (or
// evaluated once on the pure-distance graph).
inline CpcCurve cpc_curve(const Topology& t, const Ranking& r, int k_max,
                          const ScoreParams& eval_params,
                          EndpointMode endpoint_mode = EndpointMode::interior_only,
                          CpcGraphMode graph_mode = CpcGraphMode::trials, int threads = 1) {
    const auto curves = detail::cpc_curves_for_orders(
        t, {r.order()}, {CpcMethod::composite}, k_max, eval_params, endpoint_mode, graph_mode,
        threads);
    return curves.front();
}

// Selection order of the degree-centrality baseline: degree descending,
// ties by ascending node id.
inline std::vector<NodeId> degree_order(const Topology& t) {
    const CentralityVector deg = degree_centrality(t);
    std::vector<NodeId> order(t.nodes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<NodeId>(i);
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        const double da = deg.values[static_cast<std::size_t>(a)];
        const double db = deg.values[static_cast<std::size_t>(b)];
        if (da != db) return da > db;
        return a < b;
    });
    return order;
}

struct CompareResult {
    Ranking ranking;           // composite ranking used for the first curve
    CpcCurve composite;
    CpcCurve degree;
    std::vector<double> delta_pct;  // composite minus degree, per K
};

// Composite-score curve vs. the degree-centrality baseline on identical trial
// graphs, plus their per-K difference in percentage points.
inline CompareResult compare_baselines(const Topology& t, const ScoreParams& p, int k_max,
                                       EndpointMode endpoint_mode = EndpointMode::interior_only,
                                       CpcGraphMode graph_mode = CpcGraphMode::trials,
                                       int threads = 1) {
    CompareResult result;
    result.ranking = monte_carlo_rank(t, p, threads);
    const auto curves = detail::cpc_curves_for_orders(
        t, {result.ranking.order(), degree_order(t)},
        {CpcMethod::composite, CpcMethod::degree}, k_max, p, endpoint_mode, graph_mode,
        threads);
    result.composite = curves[0];
    result.degree = curves[1];
    result.delta_pct.reserve(static_cast<std::size_t>(k_max));
    for (int k = 0; k < k_max; ++k)
        result.delta_pct.push_back(result.composite.points[static_cast<std::size_t>(k)].coverage_pct -
                                   result.degree.points[static_cast<std::size_t>(k)].coverage_pct);
    return result;
}

}  // namespace trnplan
