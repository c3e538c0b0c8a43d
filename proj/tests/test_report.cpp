#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "helpers.hpp"
#include "trnplan/report.hpp"
#include "trnplan/svg.hpp"

using namespace trnplan;

namespace {

Topology labeled_triangle() {
    return parse_topology(R"({
      "name": "tri",
      "nodes": [ { "id": 0, "label": "Alpha, HQ" }, { "id": 1 }, { "id": 2 } ],
      "links": [
        { "source": 0, "target": 1, "distance_km": 10.0 },
        { "source": 1, "target": 2, "distance_km": 5.0 },
        { "source": 0, "target": 2, "distance_km": 5.0 }
      ]
    })",
                          TopologyFormat::json);
}

}  // namespace

TEST_CASE("ranking CSV layout and quoting") {
    const Topology t = labeled_triangle();
    Ranking r;
    r.entries.push_back(RankedNode{2, 0.75, 0.5, 1.0});
    r.entries.push_back(RankedNode{0, 0.25, 0.25, 0.256201});
    r.entries.push_back(RankedNode{1, 0.1, 0.0, 0.2});
    const std::string csv = format_ranking_csv(t, r);
    REQUIRE(csv ==
            "rank,node,label,total_score,mean_bc,mean_ec\n"
            "1,2,2,0.750000,0.500000,1.000000\n"
            "2,0,\"Alpha, HQ\",0.250000,0.250000,0.256201\n"
            "3,1,1,0.100000,0.000000,0.200000\n");
}

TEST_CASE("ranking CSV parses back in order") {
    const Topology t = labeled_triangle();
    Ranking r;
    r.entries.push_back(RankedNode{2, 0.75, 0.5, 1.0});
    r.entries.push_back(RankedNode{0, 0.25, 0.25, 0.25});
    r.entries.push_back(RankedNode{1, 0.1, 0.0, 0.2});
    const Ranking back = parse_ranking_csv(format_ranking_csv(t, r), t);
    REQUIRE(back.order() == r.order());
    REQUIRE(back.entries[0].total_score == 0.75);
    REQUIRE(back.entries[1].mean_ec == 0.25);
}

TEST_CASE("ranking CSV validation") {
    const Topology t = labeled_triangle();
    REQUIRE_THROWS_AS(parse_ranking_csv("nope\n", t), ParseError);
    const std::string header = "rank,node,label,total_score,mean_bc,mean_ec\n";
    REQUIRE_THROWS_AS(parse_ranking_csv(header + "1,9,x,0.1,0.1,0.1\n", t), ValidationError);
    REQUIRE_THROWS_AS(
        parse_ranking_csv(header + "1,0,x,0.1,0.1,0.1\n2,0,x,0.1,0.1,0.1\n", t),
        ValidationError);
    REQUIRE_THROWS_AS(parse_ranking_csv(header + "1,0,x,0.1,0.1,0.1\n", t), ValidationError);
    REQUIRE_THROWS_AS(parse_ranking_csv(header + "1,0,x,abc,0.1,0.1\n", t), ParseError);
}

TEST_CASE("curve CSVs print two decimals") {
    CpcCurve curve;
    curve.method = CpcMethod::composite;
    curve.points = {CpcPoint{1, 100.0 / 3.0}, CpcPoint{2, 58.376}};
    REQUIRE(format_cpc_csv(curve) == "k,coverage_pct\n1,33.33\n2,58.38\n");

    CompareResult cmp;
    cmp.composite.points = {CpcPoint{1, 20.0}, CpcPoint{2, 58.37}};
    cmp.degree.points = {CpcPoint{1, 18.57}, CpcPoint{2, 47.6}};
    cmp.delta_pct = {1.43, 10.77};
    REQUIRE(format_compare_csv(cmp) ==
            "k,composite_pct,degree_pct,delta_pct\n"
            "1,20.00,18.57,1.43\n"
            "2,58.37,47.60,10.77\n");
}

TEST_CASE("sidecar JSON carries the run description") {
    nlohmann::json params;
    params["alpha"] = 0.5;
    params["trials"] = 1000;
    const std::string sidecar = format_sidecar_json("rank", params, "abc123", "0.1.0");
    REQUIRE(sidecar.back() == '\n');
    const auto doc = nlohmann::json::parse(sidecar);
    REQUIRE(doc["command"] == "rank");
    REQUIRE(doc["params"]["trials"] == 1000);
    REQUIRE(doc["topology_sha256"] == "abc123");
    REQUIRE(doc["tool_version"] == "0.1.0");
}

TEST_CASE("svg charts are deterministic and structurally sane") {
    SvgSeries s{"composite", "#1f77b4", {{1.0, 10.0}, {2.0, 30.0}, {3.0, 55.5}}};
    const std::string svg = svg_line_chart("t", "K", "%", {s});
    REQUIRE(svg.rfind("<svg", 0) == 0);
    REQUIRE(svg.find("polyline") != std::string::npos);
    REQUIRE(svg.find("composite") != std::string::npos);
    REQUIRE(svg == svg_line_chart("t", "K", "%", {s}));
}
