#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "trnplan/errors.hpp"
#include "trnplan/weighting.hpp"

namespace trnplan {

enum class CentralityKind { betweenness, eigenvector, degree };

struct CentralityVector {
    CentralityKind kind;
    std::vector<double> values;  // indexed by NodeId
};

// Single-source shortest-path structure with path multiplicities.
struct ShortestPathTree {
    NodeId source = 0;
    std::vector<double> dist;
    std::vector<double> sigma;               // number of shortest paths from source
    std::vector<std::vector<NodeId>> preds;  // shortest-path predecessors
    std::vector<NodeId> settle_order;        // nondecreasing dist
};

// Two path lengths count as tied when they differ by at most this relative
// amount; floating-point sums of equal-weight edges must compare equal for
// the multiplicity counts.
inline constexpr double kPathTieRel = 1e-12;

inline double path_tie_tolerance(double dist) {
    return kPathTieRel * std::max(1.0, dist);
}

// Dijkstra with predecessor sets and shortest-path counting. All weights must
// be positive, which guarantees every predecessor settles before its
// successor.
inline ShortestPathTree dijkstra_sssp(const WeightedGraph& g, NodeId source) {
    if (!g.contains(source))
        throw NodeNotFound("source " + std::to_string(source));
    const int n = g.node_count();
    constexpr double kInf = std::numeric_limits<double>::infinity();

    ShortestPathTree tree;
    tree.source = source;
    tree.dist.assign(static_cast<std::size_t>(n), kInf);
    tree.sigma.assign(static_cast<std::size_t>(n), 0.0);
    tree.preds.assign(static_cast<std::size_t>(n), {});
    tree.settle_order.reserve(static_cast<std::size_t>(n));

    std::vector<char> settled(static_cast<std::size_t>(n), 0);
    using Item = std::pair<double, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;

    tree.dist[static_cast<std::size_t>(source)] = 0.0;
    tree.sigma[static_cast<std::size_t>(source)] = 1.0;
    queue.emplace(0.0, source);

    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (settled[static_cast<std::size_t>(u)]) continue;
        settled[static_cast<std::size_t>(u)] = 1;
        tree.settle_order.push_back(u);
        for (const auto& [v, w] : g.neighbors(u)) {
            const auto vi = static_cast<std::size_t>(v);
            const double candidate = d + w;
            if (tree.dist[vi] == kInf ||
                candidate < tree.dist[vi] - path_tie_tolerance(tree.dist[vi])) {
                tree.dist[vi] = candidate;
                tree.sigma[vi] = tree.sigma[static_cast<std::size_t>(u)];
                tree.preds[vi].assign(1, u);
                queue.emplace(candidate, v);
            } else if (!settled[vi] &&
                       std::abs(candidate - tree.dist[vi]) <=
                           path_tie_tolerance(tree.dist[vi])) {
                tree.sigma[vi] += tree.sigma[static_cast<std::size_t>(u)];
                tree.preds[vi].push_back(u);
            }
        }
    }
    return tree;
}

// Betweenness via Brandes dependency accumulation, endpoints excluded,
// normalized by the (n-1)(n-2)/2 unordered pairs that exclude each node.
// Sources are processed in ascending id order so the floating-point
// accumulation is bitwise deterministic.
inline CentralityVector betweenness(const WeightedGraph& g) {
    const int n = g.node_count();
    CentralityVector out{CentralityKind::betweenness,
                         std::vector<double>(static_cast<std::size_t>(n), 0.0)};
    if (n < 3) return out;  // no interior vertices

    std::vector<double> delta(static_cast<std::size_t>(n));
    for (NodeId s = 0; s < n; ++s) {
        const ShortestPathTree tree = dijkstra_sssp(g, s);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto it = tree.settle_order.rbegin(); it != tree.settle_order.rend(); ++it) {
            const NodeId w = *it;
            const auto wi = static_cast<std::size_t>(w);
            for (NodeId v : tree.preds[wi]) {
                const auto vi = static_cast<std::size_t>(v);
                delta[vi] += tree.sigma[vi] / tree.sigma[wi] * (1.0 + delta[wi]);
            }
            if (w != s) out.values[wi] += delta[wi];
        }
    }
    // Each unordered pair was visited from both endpoints.
    const double scale = 1.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
    for (double& v : out.values) v *= scale;
    return out;
}

// How edge weights populate the affinity matrix for eigenvector centrality.
// Weights are costs, so the default takes their reciprocal to obtain a
// connection strength.
enum class EcMode { inverse_weight, unweighted, raw_weight };

struct EigenvectorResult {
    CentralityVector centrality;  // L2-normalized, all entries positive
    double eigenvalue = 0.0;      // Rayleigh quotient at the returned vector
    int iterations = 0;
};

// Power iteration for the Perron vector of the affinity matrix. The iteration
// runs on A + I: the diagonal shift keeps the dominant eigenvalue strictly
// separated in magnitude on bipartite graphs without changing eigenvectors.
inline EigenvectorResult eigenvector(const WeightedGraph& g,
                                     EcMode mode = EcMode::inverse_weight,
                                     double tol = 1e-10, int max_iter = 10000) {
    if (!(tol > 0.0)) throw DomainError("tol must be positive, got " + std::to_string(tol));
    if (max_iter < 1)
        throw DomainError("max_iter must be at least 1, got " + std::to_string(max_iter));
    const int n = g.node_count();
    const auto affinity = [mode](double w) {
        switch (mode) {
            case EcMode::inverse_weight: return 1.0 / w;
            case EcMode::unweighted: return 1.0;
            case EcMode::raw_weight: return w;
        }
        return 1.0;
    };

    const auto apply_affinity = [&](const std::vector<double>& x, std::vector<double>& ax) {
        std::fill(ax.begin(), ax.end(), 0.0);
        for (const WeightedEdge& e : g.edges()) {
            const double a = affinity(e.weight);
            ax[static_cast<std::size_t>(e.u)] += a * x[static_cast<std::size_t>(e.v)];
            ax[static_cast<std::size_t>(e.v)] += a * x[static_cast<std::size_t>(e.u)];
        }
    };

    std::vector<double> x(static_cast<std::size_t>(n),
                          1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> next(static_cast<std::size_t>(n));

    int iter = 0;
    bool converged = false;
    while (iter < max_iter) {
        ++iter;
        apply_affinity(x, next);
        double norm_sq = 0.0;
        for (std::size_t i = 0; i < next.size(); ++i) {
            next[i] += x[i];  // diagonal shift
            norm_sq += next[i] * next[i];
        }
        const double norm = std::sqrt(norm_sq);
        double diff = 0.0;
        for (std::size_t i = 0; i < next.size(); ++i) {
            next[i] /= norm;
            diff = std::max(diff, std::abs(next[i] - x[i]));
        }
        x.swap(next);
        if (diff < tol) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw NoConvergence("eigenvector centrality did not reach tol=" + std::to_string(tol) +
                                " within " + std::to_string(max_iter) + " iterations",
                            max_iter);

    apply_affinity(x, next);
    double rayleigh = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) rayleigh += x[i] * next[i];

    EigenvectorResult result;
    result.centrality = CentralityVector{CentralityKind::eigenvector, std::move(x)};
    result.eigenvalue = rayleigh;
    result.iterations = iter;
    return result;
}

// Degree over n-1, computed on the raw topology; the baseline ranking metric.
inline CentralityVector degree_centrality(const Topology& t) {
    const int n = t.node_count();
    const std::vector<int> deg = t.degrees();
    CentralityVector out{CentralityKind::degree,
                         std::vector<double>(static_cast<std::size_t>(n), 0.0)};
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = static_cast<double>(deg[i]) / static_cast<double>(n - 1);
    return out;
}

}  // namespace trnplan
