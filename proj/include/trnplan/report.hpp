#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "trnplan/errors.hpp"
#include "trnplan/evaluation.hpp"
#include "trnplan/placement.hpp"
#include "trnplan/topology.hpp"

namespace trnplan {

namespace detail {

inline std::string fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace detail

inline constexpr int kScoreDecimals = 6;
inline constexpr int kCoverageDecimals = 2;

// rank,node,label,total_score,mean_bc,mean_ec: one row per node in rank
// order, scores at 6 decimal places.
inline std::string format_ranking_csv(const Topology& t, const Ranking& r) {
    std::string out = "rank,node,label,total_score,mean_bc,mean_ec\n";
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
        const RankedNode& e = r.entries[i];
        out += std::to_string(i + 1);
        out += ',';
        out += std::to_string(e.node);
        out += ',';
        out += detail::csv_field(t.nodes[static_cast<std::size_t>(e.node)].display_label());
        out += ',';
        out += detail::fixed(e.total_score, kScoreDecimals);
        out += ',';
        out += detail::fixed(e.mean_bc, kScoreDecimals);
        out += ',';
        out += detail::fixed(e.mean_ec, kScoreDecimals);
        out += '\n';
    }
    return out;
}

// Reads a ranking CSV back. The entries must form a permutation of the
// topology's node set; scores carry the file's printed precision.
inline Ranking parse_ranking_csv(const std::string& text, const Topology& t) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    if (lines.empty() || lines[0] != "rank,node,label,total_score,mean_bc,mean_ec")
        throw ParseError("ranking CSV must start with the ranking header");

    Ranking r;
    std::vector<char> seen(t.nodes.size(), 0);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const auto fields = detail::split_csv_line(lines[i]);
        if (fields.size() != 6)
            throw ParseError("ranking CSV row " + std::to_string(i) + ": expected 6 fields");
        RankedNode e;
        try {
            e.node = static_cast<NodeId>(std::stol(fields[1]));
            e.total_score = std::stod(fields[3]);
            e.mean_bc = std::stod(fields[4]);
            e.mean_ec = std::stod(fields[5]);
        } catch (const std::exception&) {
            throw ParseError("ranking CSV row " + std::to_string(i) + ": bad number");
        }
        if (e.node < 0 || e.node >= t.node_count())
            throw ValidationError("ranking CSV row " + std::to_string(i) +
                                  " references unknown node " + fields[1]);
        if (seen[static_cast<std::size_t>(e.node)])
            throw ValidationError("ranking CSV lists node " + fields[1] + " twice");
        seen[static_cast<std::size_t>(e.node)] = 1;
        r.entries.push_back(e);
    }
    if (r.entries.size() != t.nodes.size())
        throw ValidationError("ranking CSV covers " + std::to_string(r.entries.size()) +
                              " nodes, topology has " + std::to_string(t.nodes.size()));
    return r;
}

// k,coverage_pct at 2 decimal places.
inline std::string format_cpc_csv(const CpcCurve& curve) {
    std::string out = "k,coverage_pct\n";
    for (const CpcPoint& pt : curve.points) {
        out += std::to_string(pt.k);
        out += ',';
        out += detail::fixed(pt.coverage_pct, kCoverageDecimals);
        out += '\n';
    }
    return out;
}

// k,composite_pct,degree_pct,delta_pct at 2 decimal places.
inline std::string format_compare_csv(const CompareResult& cmp) {
    std::string out = "k,composite_pct,degree_pct,delta_pct\n";
    for (std::size_t i = 0; i < cmp.composite.points.size(); ++i) {
        out += std::to_string(cmp.composite.points[i].k);
        out += ',';
        out += detail::fixed(cmp.composite.points[i].coverage_pct, kCoverageDecimals);
        out += ',';
        out += detail::fixed(cmp.degree.points[i].coverage_pct, kCoverageDecimals);
        out += ',';
        out += detail::fixed(cmp.delta_pct[i], kCoverageDecimals);
        out += '\n';
    }
    return out;
}

// Run record written next to every result file; together with the input it
// fully determines the outputs.
inline std::string format_sidecar_json(const std::string& command,
                                       const nlohmann::json& params,
                                       const std::string& topology_sha256,
                                       const std::string& tool_version) {
    nlohmann::json doc;
    doc["command"] = command;
    doc["params"] = params;
    doc["topology_sha256"] = topology_sha256;
    doc["tool_version"] = tool_version;
    return doc.dump(2) + "\n";
}

}  // namespace trnplan
