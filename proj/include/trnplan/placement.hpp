#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "trnplan/centrality.hpp"
#include "trnplan/errors.hpp"
#include "trnplan/numeric.hpp"
#include "trnplan/weighting.hpp"

namespace trnplan {

struct ScoreParams {
    double beta = 0.5;         // weight of betweenness in the composite score
    WeightParams alpha{0.5};   // distance/reliability blend for edge weights
    int trials = 1000;         // Monte Carlo reliability draws
    std::uint64_t base_seed = 42;
    EcMode ec_mode = EcMode::inverse_weight;
};

struct RankedNode {
    NodeId node = 0;
    double total_score = 0.0;
    double mean_bc = 0.0;
    double mean_ec = 0.0;
};

// Nodes ordered by total score, strictly descending, ties broken by
// ascending id. Always a permutation of the topology's node set.
struct Ranking {
    std::vector<RankedNode> entries;
    ScoreParams params;

    std::vector<NodeId> order() const {
        std::vector<NodeId> ids;
        ids.reserve(entries.size());
        for (const RankedNode& e : entries) ids.push_back(e.node);
        return ids;
    }
};

inline double composite_score(double bc, double ec, double beta) {
    if (!(beta >= 0.0 && beta <= 1.0))
        throw DomainError("beta must lie in [0, 1], got " + std::to_string(beta));
    return beta * bc + (1.0 - beta) * ec;
}

inline void sort_ranking_entries(std::vector<RankedNode>& entries) {
    std::sort(entries.begin(), entries.end(), [](const RankedNode& a, const RankedNode& b) {
        if (a.total_score != b.total_score) return a.total_score > b.total_score;
        return a.node < b.node;
    });
}

namespace detail {

inline void validate_score_params(const ScoreParams& p) {
    if (!(p.beta >= 0.0 && p.beta <= 1.0))
        throw DomainError("beta must lie in [0, 1], got " + std::to_string(p.beta));
    if (!(p.alpha.alpha >= 0.0 && p.alpha.alpha <= 1.0))
        throw DomainError("alpha must lie in [0, 1], got " + std::to_string(p.alpha.alpha));
    if (p.trials < 1)
        throw DomainError("trials must be at least 1, got " + std::to_string(p.trials));
}

// Runs fn(trial) for every trial in [0, trials). Workers take contiguous
// chunks; callers must write results into per-trial slots so the outcome is
// independent of the schedule. The lowest failing trial index wins error
// reporting.
template <typename Fn>
void run_trials(int trials, int threads, Fn&& fn) {
    threads = std::max(1, std::min(threads, trials));
    if (threads == 1) {
        for (int i = 0; i < trials; ++i) fn(i);
        return;
    }
    std::mutex error_mutex;
    int first_error_trial = std::numeric_limits<int>::max();
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
        const int begin = static_cast<int>(std::int64_t(trials) * w / threads);
        const int end = static_cast<int>(std::int64_t(trials) * (w + 1) / threads);
        pool.emplace_back([&, begin, end] {
            for (int i = begin; i < end; ++i) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (i < first_error_trial) {
                        first_error_trial = i;
                        first_error = std::current_exception();
                    }
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace detail

// Samples `trials` reliability assignments, scores betweenness and
// eigenvector centrality on each modified graph, averages them in ascending
// trial order with compensated summation, and ranks nodes by the composite
// score. Bitwise deterministic for fixed inputs regardless of thread count.
inline Ranking monte_carlo_rank(const Topology& t, const ScoreParams& p, int threads = 1) {
    detail::validate_score_params(p);
    const int n = t.node_count();
    const int trials = p.trials;

    std::vector<std::vector<double>> bc_by_trial(static_cast<std::size_t>(trials));
    std::vector<std::vector<double>> ec_by_trial(static_cast<std::size_t>(trials));

    detail::run_trials(trials, threads, [&](int trial) {
        const ReliabilityAssignment r =
            sample_reliabilities(t, p.base_seed, static_cast<std::uint64_t>(trial));
        const WeightedGraph g = build_modified_graph(t, r, p.alpha);
        try {
            bc_by_trial[static_cast<std::size_t>(trial)] = betweenness(g).values;
            ec_by_trial[static_cast<std::size_t>(trial)] =
                eigenvector(g, p.ec_mode).centrality.values;
        } catch (const NoConvergence& e) {
            throw NoConvergence("trial " + std::to_string(trial) + ": " + e.what(),
                                e.iterations());
        }
    });

    Ranking ranking;
    ranking.params = p;
    ranking.entries.reserve(static_cast<std::size_t>(n));
    for (NodeId v = 0; v < n; ++v) {
        KahanSum bc_sum;
        KahanSum ec_sum;
        for (int i = 0; i < trials; ++i) {
            bc_sum.add(bc_by_trial[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)]);
            ec_sum.add(ec_by_trial[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)]);
        }
        RankedNode entry;
        entry.node = v;
        entry.mean_bc = bc_sum.value() / static_cast<double>(trials);
        entry.mean_ec = ec_sum.value() / static_cast<double>(trials);
        entry.total_score = composite_score(entry.mean_bc, entry.mean_ec, p.beta);
        ranking.entries.push_back(entry);
    }
    sort_ranking_entries(ranking.entries);
    return ranking;
}

// First k nodes of the ranking.
inline std::vector<NodeId> top_k(const Ranking& r, int k) {
    const int n = static_cast<int>(r.entries.size());
    if (k < 1 || k > n)
        throw DomainError("k must lie in [1, " + std::to_string(n) + "], got " +
                          std::to_string(k));
    std::vector<NodeId> ids;
    ids.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) ids.push_back(r.entries[static_cast<std::size_t>(i)].node);
    return ids;
}

}  // namespace trnplan
