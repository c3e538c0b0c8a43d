#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "helpers.hpp"
#include "oracles.hpp"
#include "trnplan/evaluation.hpp"

using namespace trnplan;
using namespace trnplan::testing;
using Catch::Approx;

namespace {

Ranking manual_ranking(const std::vector<NodeId>& order) {
    Ranking r;
    double score = static_cast<double>(order.size());
    for (NodeId v : order) {
        r.entries.push_back(RankedNode{v, score, score, score});
        score -= 1.0;
    }
    return r;
}

}  // namespace

TEST_CASE("canonical paths on a path graph") {
    const PathTable paths = canonical_paths(path3());
    REQUIRE(paths.path(0, 1) == std::vector<NodeId>{0, 1});
    REQUIRE(paths.path(0, 2) == std::vector<NodeId>{0, 1, 2});
    REQUIRE(paths.path(1, 2) == std::vector<NodeId>{1, 2});
    REQUIRE(paths.pair_count() == 3);
}

TEST_CASE("ties resolve toward the smallest node id") {
    const PathTable paths = canonical_paths(cycle4());
    REQUIRE(paths.path(0, 2) == std::vector<NodeId>{0, 1, 2});
    REQUIRE(paths.path(1, 3) == std::vector<NodeId>{1, 0, 3});
}

TEST_CASE("single edge graph has one single-hop path") {
    const PathTable paths = canonical_paths(make_graph(2, {{0, 1, 4.2}}));
    REQUIRE(paths.pair_count() == 1);
    REQUIRE(paths.path(0, 1) == std::vector<NodeId>{0, 1});
}

TEST_CASE("cpc on the path graph") {
    const PathTable paths = canonical_paths(path3());
    REQUIRE(cpc(paths, {1}, EndpointMode::interior_only) == Approx(100.0 / 3.0));
    REQUIRE(cpc(paths, {1}, EndpointMode::include_endpoints) == 100.0);
    REQUIRE(cpc(paths, {}, EndpointMode::interior_only) == 0.0);
    REQUIRE(cpc(paths, {}, EndpointMode::include_endpoints) == 0.0);
    REQUIRE_THROWS_AS(cpc(paths, {9}, EndpointMode::interior_only), NodeNotFound);
}

TEST_CASE("cpc is monotone in the TRN set and endpoint mode") {
    SplitMix64 rng(3);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 4 + static_cast<int>(rng.next_below(5));
        const WeightedGraph g = random_connected_graph(rng, n, 0.4);
        const PathTable paths = canonical_paths(g);
        std::vector<NodeId> small;
        for (NodeId v = 0; v < n; ++v)
            if (rng.next_unit() < 0.3) small.push_back(v);
        std::vector<NodeId> big = small;  // superset of small plus extras
        for (NodeId v = 0; v < n; ++v)
            if (rng.next_unit() < 0.3 &&
                std::find(big.begin(), big.end(), v) == big.end())
                big.push_back(v);
        const double c_small = cpc(paths, small);
        const double c_big = cpc(paths, big);
        REQUIRE(c_small <= c_big);
        REQUIRE(c_small >= 0.0);
        REQUIRE(c_big <= 100.0);
        REQUIRE(cpc(paths, small, EndpointMode::include_endpoints) >= c_small);
    }
}

TEST_CASE("cpc agrees exactly with the enumeration oracle") {
    SplitMix64 rng(5);
    for (int rep = 0; rep < 30; ++rep) {
        const int n = 4 + static_cast<int>(rng.next_below(5));
        // quantized weights to exercise tied shortest paths
        WeightedGraph base = random_connected_graph(rng, n, 0.45);
        std::vector<WeightedEdge> edges = base.edges();
        for (WeightedEdge& e : edges)
            e.weight = 0.5 * (1.0 + static_cast<double>(rng.next_below(3)));
        const WeightedGraph g(n, std::move(edges));

        const PathTable paths = canonical_paths(g);
        const auto dist = floyd_warshall(g);
        for (NodeId s = 0; s < n; ++s)
            for (NodeId t = s + 1; t < n; ++t)
                REQUIRE(paths.path(s, t) == canonical_path_oracle(g, s, t, dist[s][t]));

        std::vector<NodeId> trns;
        for (NodeId v = 0; v < n; ++v)
            if (rng.next_unit() < 0.4) trns.push_back(v);
        for (const EndpointMode mode :
             {EndpointMode::interior_only, EndpointMode::include_endpoints}) {
            REQUIRE(cpc(paths, trns, mode) == cpc_oracle(g, trns, mode));
        }
    }
}

TEST_CASE("cpc curve on the path graph is flat") {
    const Topology t = parse_topology("0 1 10\n1 2 10\n", TopologyFormat::edgelist);
    const Ranking r = manual_ranking({1, 0, 2});
    ScoreParams p;
    p.trials = 4;
    const CpcCurve curve = cpc_curve(t, r, 3, p);
    REQUIRE(curve.points.size() == 3);
    for (const CpcPoint& pt : curve.points) REQUIRE(pt.coverage_pct == Approx(100.0 / 3.0));
    REQUIRE(curve.points[0].k == 1);
    REQUIRE(curve.points[2].k == 3);
}

TEST_CASE("curves are non-decreasing and full coverage hits the long-pair fraction") {
    SplitMix64 rng(9);
    for (int rep = 0; rep < 10; ++rep) {
        const Topology t = random_topology(rng);
        const int n = t.node_count();
        ScoreParams p;
        p.trials = 5;
        p.base_seed = rng.next();
        const Ranking r = monte_carlo_rank(t, p);
        const CpcCurve curve = cpc_curve(t, r, n, p);
        REQUIRE(curve.points.size() == static_cast<std::size_t>(n));
        for (std::size_t i = 1; i < curve.points.size(); ++i)
            REQUIRE(curve.points[i].coverage_pct >= curve.points[i - 1].coverage_pct);

        // with every node selected, exactly the pairs whose canonical path
        // has an interior node are covered
        std::vector<NodeId> all(n);
        for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
        double mean_long_fraction = 0.0;
        for (int trial = 0; trial < p.trials; ++trial) {
            const auto rel = sample_reliabilities(t, p.base_seed, trial);
            const WeightedGraph g = build_modified_graph(t, rel, p.alpha);
            const PathTable paths = canonical_paths(g);
            std::int64_t long_pairs = 0;
            for (const auto& path : paths.paths())
                if (path.size() > 2) ++long_pairs;
            mean_long_fraction += 100.0 * static_cast<double>(long_pairs) /
                                  static_cast<double>(paths.pair_count());
        }
        mean_long_fraction /= p.trials;
        REQUIRE(curve.points.back().coverage_pct == Approx(mean_long_fraction).margin(1e-9));
    }
}

TEST_CASE("distance graph mode evaluates once on the alpha=1 graph") {
    SplitMix64 rng(15);
    const Topology t = random_topology(rng);
    ScoreParams p;
    p.trials = 3;
    const Ranking r = monte_carlo_rank(t, p);
    const CpcCurve curve =
        cpc_curve(t, r, t.node_count(), p, EndpointMode::interior_only, CpcGraphMode::distance);

    const ReliabilityAssignment ones{
        std::vector<double>(static_cast<std::size_t>(t.node_count()), 1.0)};
    const WeightedGraph g = build_modified_graph(t, ones, WeightParams{1.0});
    const PathTable paths = canonical_paths(g);
    for (const CpcPoint& pt : curve.points) {
        const auto trns = top_k(r, pt.k);
        REQUIRE(pt.coverage_pct == cpc(paths, trns));
    }
}

TEST_CASE("compare_baselines pairs the curves and their delta") {
    const Topology star = parse_topology("0 1 20\n0 2 30\n0 3 40\n0 4 50\n0 5 60\n",
                                         TopologyFormat::edgelist);
    ScoreParams p;
    p.trials = 8;
    const CompareResult cmp = compare_baselines(star, p, star.node_count());
    REQUIRE(cmp.composite.points.size() == 6);
    REQUIRE(cmp.degree.points.size() == 6);
    REQUIRE(cmp.delta_pct.size() == 6);

    // both selection rules pick the center first, so the first delta is zero;
    // selecting everything also equalizes them
    REQUIRE(cmp.ranking.entries.front().node == 0);
    REQUIRE(cmp.delta_pct.front() == 0.0);
    REQUIRE(cmp.delta_pct.back() == 0.0);
    // the center is interior to every leaf-leaf pair: 10 of 15 pairs
    REQUIRE(cmp.composite.points.front().coverage_pct == Approx(200.0 / 3.0));
}

TEST_CASE("evaluation trial loops are thread-count independent") {
    SplitMix64 rng(21);
    const Topology t = random_topology(rng, 8, 12);
    ScoreParams p;
    p.trials = 24;
    const CompareResult a = compare_baselines(t, p, t.node_count(), EndpointMode::interior_only,
                                              CpcGraphMode::trials, 1);
    const CompareResult b = compare_baselines(t, p, t.node_count(), EndpointMode::interior_only,
                                              CpcGraphMode::trials, 6);
    for (std::size_t i = 0; i < a.composite.points.size(); ++i) {
        REQUIRE(a.composite.points[i].coverage_pct == b.composite.points[i].coverage_pct);
        REQUIRE(a.degree.points[i].coverage_pct == b.degree.points[i].coverage_pct);
    }
}

TEST_CASE("degree order sorts by degree with id tie-breaks") {
    const Topology t =
        parse_topology("0 1 10\n1 2 10\n2 3 10\n3 0 10\n0 2 10\n", TopologyFormat::edgelist);
    // degrees: 0 -> 3, 2 -> 3, 1 -> 2, 3 -> 2
    REQUIRE(degree_order(t) == std::vector<NodeId>{0, 2, 1, 3});
}

TEST_CASE("k_max bounds are enforced") {
    SplitMix64 rng(25);
    const Topology t = random_topology(rng);
    ScoreParams p;
    p.trials = 2;
    const Ranking r = monte_carlo_rank(t, p);
    REQUIRE_THROWS_AS(cpc_curve(t, r, 0, p), DomainError);
    REQUIRE_THROWS_AS(cpc_curve(t, r, t.node_count() + 1, p), DomainError);
}
