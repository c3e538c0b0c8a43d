#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "trnplan/errors.hpp"
#include "trnplan/rng.hpp"

namespace trnplan {

using NodeId = std::int32_t;

// Node identifier as written in the input file. Integer keys order
// numerically and sort before string keys, so canonicalization does not
// depend on record order in the file.
struct NodeKey {
    bool is_int = false;
    std::int64_t num = 0;
    std::string text;

    static NodeKey of_int(std::int64_t v) { return NodeKey{true, v, {}}; }
    static NodeKey of_string(std::string s) { return NodeKey{false, 0, std::move(s)}; }

    std::string to_string() const { return is_int ? std::to_string(num) : text; }

    friend bool operator==(const NodeKey& a, const NodeKey& b) {
        return a.is_int == b.is_int && a.num == b.num && a.text == b.text;
    }
    friend bool operator<(const NodeKey& a, const NodeKey& b) {
        if (a.is_int != b.is_int) return a.is_int;
        if (a.is_int) return a.num < b.num;
        return a.text < b.text;
    }
};

struct NodeRecord {
    NodeId id = 0;  // dense canonical index in [0, n)
    NodeKey key;    // original file identifier
    std::optional<std::string> label;
    std::optional<double> reliability;  // fixed trust level, overrides sampling

    std::string display_label() const { return label ? *label : key.to_string(); }
};

// Undirected fiber link; canonical form keeps u < v.
struct Link {
    NodeId u = 0;
    NodeId v = 0;
    double distance_km = 0.0;

    friend bool operator==(const Link& a, const Link& b) {
        return a.u == b.u && a.v == b.v && a.distance_km == b.distance_km;
    }
};

struct Topology {
    std::string name;
    std::vector<NodeRecord> nodes;  // nodes[i].id == i
    std::vector<Link> links;        // sorted by (u, v)

    int node_count() const { return static_cast<int>(nodes.size()); }
    int link_count() const { return static_cast<int>(links.size()); }

    std::vector<int> degrees() const {
        std::vector<int> deg(nodes.size(), 0);
        for (const Link& l : links) {
            ++deg[l.u];
            ++deg[l.v];
        }
        return deg;
    }

    std::vector<std::vector<NodeId>> adjacency() const {
        std::vector<std::vector<NodeId>> adj(nodes.size());
        for (const Link& l : links) {
            adj[l.u].push_back(l.v);
            adj[l.v].push_back(l.u);
        }
        for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
        return adj;
    }

    friend bool operator==(const Topology& a, const Topology& b) {
        if (a.name != b.name || a.nodes.size() != b.nodes.size() || a.links != b.links)
            return false;
        for (std::size_t i = 0; i < a.nodes.size(); ++i) {
            const NodeRecord& x = a.nodes[i];
            const NodeRecord& y = b.nodes[i];
            if (!(x.id == y.id && x.key == y.key && x.label == y.label &&
                  x.reliability == y.reliability))
                return false;
        }
        return true;
    }
};

enum class TopologyFormat { json, edgelist };

enum class TopologyModel { ring_chords, grid_diag };

namespace detail {

struct RawNode {
    NodeKey key;
    std::optional<std::string> label;
    std::optional<double> reliability;
};

struct RawLink {
    NodeKey a;
    NodeKey b;
    double distance_km = 0.0;
    std::string record;  // source text for error messages
};

// Assigns dense ids by sorted key, validates every model invariant, and
// returns the canonical topology.
inline Topology canonicalize(std::string name, std::vector<RawNode> raw_nodes,
                             const std::vector<RawLink>& raw_links) {
    if (raw_nodes.size() < 2)
        throw ValidationError("topology needs at least 2 nodes, got " +
                              std::to_string(raw_nodes.size()));

    std::sort(raw_nodes.begin(), raw_nodes.end(),
              [](const RawNode& a, const RawNode& b) { return a.key < b.key; });
    for (std::size_t i = 1; i < raw_nodes.size(); ++i) {
        if (raw_nodes[i].key == raw_nodes[i - 1].key)
            throw ValidationError("duplicate node id: " + raw_nodes[i].key.to_string());
    }

    std::map<NodeKey, NodeId> index;
    Topology t;
    t.name = std::move(name);
    t.nodes.reserve(raw_nodes.size());
    for (std::size_t i = 0; i < raw_nodes.size(); ++i) {
        const RawNode& rn = raw_nodes[i];
        if (rn.reliability && (*rn.reliability < 0.5 || *rn.reliability > 1.0))
            throw ValidationError("reliability of node " + rn.key.to_string() +
                                  " must lie in [0.5, 1.0], got " +
                                  std::to_string(*rn.reliability));
        NodeRecord rec;
        rec.id = static_cast<NodeId>(i);
        rec.key = rn.key;
        rec.label = rn.label;
        rec.reliability = rn.reliability;
        index.emplace(rec.key, rec.id);
        t.nodes.push_back(std::move(rec));
    }

    if (raw_links.empty()) throw ValidationError("topology has no links");

    t.links.reserve(raw_links.size());
    for (const RawLink& rl : raw_links) {
        auto ia = index.find(rl.a);
        auto ib = index.find(rl.b);
        if (ia == index.end())
            throw ValidationError("link references unknown node " + rl.a.to_string() +
                                  ": " + rl.record);
        if (ib == index.end())
            throw ValidationError("link references unknown node " + rl.b.to_string() +
                                  ": " + rl.record);
        if (ia->second == ib->second)
            throw ValidationError("self-loop: " + rl.record);
        if (!(rl.distance_km > 0.0) || !std::isfinite(rl.distance_km))
            throw ValidationError("non-positive distance: " + rl.record);
        Link l;
        l.u = std::min(ia->second, ib->second);
        l.v = std::max(ia->second, ib->second);
        l.distance_km = rl.distance_km;
        t.links.push_back(l);
    }

    std::sort(t.links.begin(), t.links.end(), [](const Link& a, const Link& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (std::size_t i = 1; i < t.links.size(); ++i) {
        if (t.links[i].u == t.links[i - 1].u && t.links[i].v == t.links[i - 1].v)
            throw ValidationError("duplicate edge between " +
                                  t.nodes[t.links[i].u].key.to_string() + " and " +
                                  t.nodes[t.links[i].v].key.to_string());
    }

    // Connectivity; the error names one node from each component.
    const auto adj = t.adjacency();
    std::vector<int> component(t.nodes.size(), -1);
    int num_components = 0;
    std::vector<NodeId> reps;
    for (NodeId start = 0; start < t.node_count(); ++start) {
        if (component[start] >= 0) continue;
        reps.push_back(start);
        std::vector<NodeId> stack{start};
        component[start] = num_components;
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (NodeId v : adj[u]) {
                if (component[v] < 0) {
                    component[v] = num_components;
                    stack.push_back(v);
                }
            }
        }
        ++num_components;
    }
    if (num_components > 1) {
        std::ostringstream msg;
        msg << "graph is disconnected; " << num_components
            << " components with representative nodes";
        for (NodeId r : reps) msg << " " << t.nodes[r].key.to_string();
        throw ValidationError(msg.str());
    }

    return t;
}

inline NodeKey key_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return NodeKey::of_int(j.get<std::int64_t>());
    if (j.is_string()) return NodeKey::of_string(j.get<std::string>());
    throw ParseError("node id must be an integer or a string, got " + j.dump());
}

// Edge-list tokens that look like integers compare numerically.
inline NodeKey key_from_token(const std::string& tok) {
    if (!tok.empty()) {
        std::size_t pos = 0;
        bool digits = tok[0] == '-' ? tok.size() > 1 : true;
        for (std::size_t i = (tok[0] == '-') ? 1 : 0; i < tok.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(tok[i]))) digits = false;
        if (digits) {
            try {
                return NodeKey::of_int(std::stoll(tok, &pos));
            } catch (const std::exception&) {
                // falls through to string key on overflow
            }
        }
    }
    return NodeKey::of_string(tok);
}

inline Topology parse_topology_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object()) throw ParseError("top-level JSON value must be an object");

    std::string name = doc.value("name", std::string{});

    if (!doc.contains("nodes") || !doc["nodes"].is_array())
        throw ParseError("missing \"nodes\" array");
    if (!doc.contains("links") || !doc["links"].is_array())
        throw ParseError("missing \"links\" array");

    std::vector<RawNode> nodes;
    for (const auto& jn : doc["nodes"]) {
        if (!jn.is_object() || !jn.contains("id"))
            throw ParseError("node record must be an object with an \"id\": " + jn.dump());
        RawNode rn;
        rn.key = key_from_json(jn["id"]);
        if (jn.contains("label")) {
            if (!jn["label"].is_string())
                throw ParseError("node label must be a string: " + jn.dump());
            rn.label = jn["label"].get<std::string>();
        }
        if (jn.contains("reliability")) {
            if (!jn["reliability"].is_number())
                throw ParseError("node reliability must be a number: " + jn.dump());
            rn.reliability = jn["reliability"].get<double>();
        }
        nodes.push_back(std::move(rn));
    }

    std::vector<RawLink> links;
    for (const auto& jl : doc["links"]) {
        if (!jl.is_object() || !jl.contains("source") || !jl.contains("target") ||
            !jl.contains("distance_km") || !jl["distance_km"].is_number())
            throw ParseError(
                "link record must be an object with source, target and numeric "
                "distance_km: " +
                jl.dump());
        RawLink rl;
        rl.a = key_from_json(jl["source"]);
        rl.b = key_from_json(jl["target"]);
        rl.distance_km = jl["distance_km"].get<double>();
        rl.record = jl.dump();
        links.push_back(std::move(rl));
    }

    return canonicalize(std::move(name), std::move(nodes), links);
}

inline Topology parse_topology_edgelist(std::istream& in) {
    std::vector<RawLink> links;
    std::map<NodeKey, bool> seen;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, d;
        if (!(ls >> a)) continue;  // blank or comment-only line
        std::string extra;
        if (!(ls >> b >> d) || (ls >> extra))
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected \"<u> <v> <distance_km>\", got \"" + line + "\"");
        std::size_t pos = 0;
        double dist = 0.0;
        try {
            dist = std::stod(d, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != d.size())
            throw ParseError("line " + std::to_string(line_no) + ": bad distance \"" + d +
                             "\"");
        RawLink rl;
        rl.a = key_from_token(a);
        rl.b = key_from_token(b);
        rl.distance_km = dist;
        rl.record = "line " + std::to_string(line_no) + ": " + a + " " + b + " " + d;
        seen[rl.a] = true;
        seen[rl.b] = true;
        links.push_back(std::move(rl));
    }
    std::vector<RawNode> nodes;
    nodes.reserve(seen.size());
    for (const auto& [key, _] : seen) nodes.push_back(RawNode{key, {}, {}});
    return canonicalize("", std::move(nodes), links);
}

}  // namespace detail

// Parses and validates a topology; node ids are remapped to a dense [0, n)
// range ordered by original key, original keys and labels are preserved.
inline Topology parse_topology(std::istream& in, TopologyFormat format) {
    switch (format) {
        case TopologyFormat::json:
            return detail::parse_topology_json(in);
        case TopologyFormat::edgelist:
            return detail::parse_topology_edgelist(in);
    }
    throw DomainError("unknown topology format");
}

inline Topology parse_topology(const std::string& text, TopologyFormat format) {
    std::istringstream in(text);
    return parse_topology(in, format);
}

// Canonical JSON serialization; parse(serialize(t)) == t.
inline std::string serialize_topology_json(const Topology& t) {
    nlohmann::json doc;
    doc["name"] = t.name;
    nlohmann::json nodes = nlohmann::json::array();
    for (const NodeRecord& rec : t.nodes) {
        nlohmann::json jn;
        if (rec.key.is_int)
            jn["id"] = rec.key.num;
        else
            jn["id"] = rec.key.text;
        if (rec.label) jn["label"] = *rec.label;
        if (rec.reliability) jn["reliability"] = *rec.reliability;
        nodes.push_back(std::move(jn));
    }
    doc["nodes"] = std::move(nodes);
    nlohmann::json links = nlohmann::json::array();
    for (const Link& l : t.links) {
        nlohmann::json jl;
        if (t.nodes[l.u].key.is_int)
            jl["source"] = t.nodes[l.u].key.num;
        else
            jl["source"] = t.nodes[l.u].key.text;
        if (t.nodes[l.v].key.is_int)
            jl["target"] = t.nodes[l.v].key.num;
        else
            jl["target"] = t.nodes[l.v].key.text;
        jl["distance_km"] = l.distance_km;
        links.push_back(std::move(jl));
    }
    doc["links"] = std::move(links);
    return doc.dump(2) + "\n";
}

// Per-link distances divided by the maximum link distance; values in (0, 1],
// aligned with t.links.
inline std::vector<double> normalize_distances(const Topology& t) {
    double max_d = 0.0;
    for (const Link& l : t.links) max_d = std::max(max_d, l.distance_km);
    std::vector<double> norm;
    norm.reserve(t.links.size());
    for (const Link& l : t.links) norm.push_back(l.distance_km / max_d);
    return norm;
}

namespace detail {

inline double random_distance_km(SplitMix64& rng) {
    // Metro-scale spans, uniform over [10, 80] km at 0.1 km granularity.
    const double d = 10.0 + rng.next_unit() * 70.0;
    return std::round(d * 10.0) / 10.0;
}

inline Topology finish_generated(const std::string& name, int n,
                                 std::vector<std::pair<NodeId, NodeId>> edges,
                                 SplitMix64& rng) {
    std::sort(edges.begin(), edges.end());
    std::vector<RawNode> nodes;
    nodes.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) nodes.push_back(RawNode{NodeKey::of_int(i), {}, {}});
    std::vector<RawLink> links;
    links.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        RawLink rl;
        rl.a = NodeKey::of_int(u);
        rl.b = NodeKey::of_int(v);
        rl.distance_km = random_distance_km(rng);
        rl.record = "generated";
        links.push_back(std::move(rl));
    }
    return canonicalize(name, std::move(nodes), links);
}

inline Topology generate_ring_chords(int n, int m, SplitMix64& rng) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < n; ++i) {
        NodeId u = static_cast<NodeId>(i);
        NodeId v = static_cast<NodeId>((i + 1) % n);
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::vector<std::pair<NodeId, NodeId>> chords;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (!(v == u + 1 || (u == 0 && v == n - 1))) chords.emplace_back(u, v);
    // Fisher-Yates, then take the first m - n chords.
    for (std::size_t i = chords.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(chords[i - 1], chords[j]);
    }
    for (int k = 0; k < m - n; ++k) edges.push_back(chords[static_cast<std::size_t>(k)]);
    return finish_generated("ring_chords_" + std::to_string(n) + "_" + std::to_string(m), n,
                            std::move(edges), rng);
}

inline Topology generate_grid_diag(int n, int m, SplitMix64& rng) {
    const int rows = std::max(1, static_cast<int>(std::floor(std::sqrt(double(n)))));
    const int cols = (n + rows - 1) / rows;
    auto at = [&](int r, int c) { return r * cols + c; };
    auto present = [&](int r, int c) {
        return r >= 0 && c >= 0 && c < cols && at(r, c) < n;
    };
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int r = 0; present(r, 0); ++r) {
        for (int c = 0; present(r, c); ++c) {
            if (present(r, c + 1)) edges.emplace_back(at(r, c), at(r, c + 1));
            if (present(r + 1, c)) edges.emplace_back(at(r, c), at(r + 1, c));
        }
    }
    const int base = static_cast<int>(edges.size());
    if (m < base)
        throw InvalidParams("grid_diag with " + std::to_string(n) + " nodes needs at least " +
                            std::to_string(base) + " links, got " + std::to_string(m));
    std::vector<std::pair<NodeId, NodeId>> diags;
    for (int r = 0; present(r, 0); ++r) {
        for (int c = 0; present(r, c); ++c) {
            if (present(r + 1, c + 1)) diags.emplace_back(at(r, c), at(r + 1, c + 1));
            if (c > 0 && present(r + 1, c - 1)) diags.emplace_back(at(r, c), at(r + 1, c - 1));
        }
    }
    if (m > base + static_cast<int>(diags.size()))
        throw InvalidParams("grid_diag with " + std::to_string(n) + " nodes supports at most " +
                            std::to_string(base + diags.size()) + " links, got " +
                            std::to_string(m));
    for (std::size_t i = diags.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(diags[i - 1], diags[j]);
    }
    for (int k = 0; k < m - base; ++k) edges.push_back(diags[static_cast<std::size_t>(k)]);
    return finish_generated("grid_diag_" + std::to_string(n) + "_" + std::to_string(m), n,
                            std::move(edges), rng);
}

}  // namespace detail

// Deterministic synthetic metro-like topology: fixed (model, n, m, seed)
// always yields the same graph, connected, with exactly m links.
inline Topology generate_topology(TopologyModel model, int n, int m, std::uint64_t seed) {
    if (n < 2) throw InvalidParams("need at least 2 nodes, got " + std::to_string(n));
    const std::int64_t max_links = std::int64_t(n) * (n - 1) / 2;
    if (m > max_links)
        throw InvalidParams("a simple graph on " + std::to_string(n) +
                            " nodes has at most " + std::to_string(max_links) +
                            " links, got " + std::to_string(m));
    SplitMix64 rng(hash_words(seed, static_cast<std::uint64_t>(model)));
    switch (model) {
        case TopologyModel::ring_chords:
            if (m < n)
                throw InvalidParams("ring_chords needs m >= n, got m=" + std::to_string(m) +
                                    ", n=" + std::to_string(n));
            return detail::generate_ring_chords(n, m, rng);
        case TopologyModel::grid_diag:
            if (m < n)
                throw InvalidParams("grid_diag needs m >= n, got m=" + std::to_string(m) +
                                    ", n=" + std::to_string(n));
            return detail::generate_grid_diag(n, m, rng);
    }
    throw DomainError("unknown topology model");
}

}  // namespace trnplan
