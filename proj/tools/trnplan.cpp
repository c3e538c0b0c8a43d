// Command-line front end: topology validation and generation, TRN ranking,
// coverage curves and baseline comparison, with CSV/JSON/SVG outputs.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "trnplan/trnplan.hpp"

namespace fs = std::filesystem;
using namespace trnplan;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    const fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open output file: " + path);
    out << bytes;
    if (!out) throw Error("failed writing output file: " + path);
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error("sha256 digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

std::string sibling_path(const std::string& out_path, const std::string& new_ext) {
    fs::path p(out_path);
    p.replace_extension(new_ext);
    return p.string();
}

TopologyFormat resolve_format(const std::string& format_flag, const std::string& input) {
    if (format_flag == "json") return TopologyFormat::json;
    if (format_flag == "edgelist") return TopologyFormat::edgelist;
    // auto: decide by extension
    return fs::path(input).extension() == ".json" ? TopologyFormat::json
                                                  : TopologyFormat::edgelist;
}

EcMode parse_ec_mode(const std::string& s) {
    if (s == "inverse-weight") return EcMode::inverse_weight;
    if (s == "unweighted") return EcMode::unweighted;
    return EcMode::raw_weight;
}

struct CommonOpts {
    std::string input;
    std::string output;
    std::string format = "auto";
    double alpha = 0.5;
    double beta = 0.5;
    int trials = 1000;
    std::uint64_t seed = 42;
    std::string ec_mode = "inverse-weight";
    int threads = 1;
};

struct CurveOpts {
    int k_max = 0;  // 0 = node count
    std::string endpoints = "interior";
    std::string cpc_graph = "trials";
    bool svg = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_scoring) {
    cmd->add_option("input", o.input, "topology file")->required();
    cmd->add_option("-o,--out", o.output, "output file")->required();
    cmd->add_option("--format", o.format, "input format")
        ->check(CLI::IsMember({"auto", "json", "edgelist"}))
        ->capture_default_str();
    if (with_scoring) {
        cmd->add_option("--alpha", o.alpha, "distance/reliability blend in link weights")
            ->check(CLI::Range(0.0, 1.0))
            ->capture_default_str();
        cmd->add_option("--beta", o.beta, "betweenness/eigenvector blend in total score")
            ->check(CLI::Range(0.0, 1.0))
            ->capture_default_str();
        cmd->add_option("--trials", o.trials, "number of reliability draws")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--seed", o.seed, "base seed for reliability sampling")
            ->capture_default_str();
        cmd->add_option("--ec-mode", o.ec_mode, "eigenvector affinity mode")
            ->check(CLI::IsMember({"inverse-weight", "unweighted", "raw-weight"}))
            ->capture_default_str();
        cmd->add_option("--threads", o.threads, "worker thread cap (results independent of it)")
            ->check(CLI::Range(1, 256))
            ->capture_default_str();
    }
}

void add_curve(CLI::App* cmd, CurveOpts& o) {
    cmd->add_option("--k-max", o.k_max, "largest TRN set size (default: node count)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--endpoints", o.endpoints, "count path endpoints as covering nodes")
        ->check(CLI::IsMember({"interior", "include"}))
        ->capture_default_str();
    cmd->add_option("--cpc-graph", o.cpc_graph, "graph the coverage paths are computed on")
        ->check(CLI::IsMember({"trials", "distance"}))
        ->capture_default_str();
    cmd->add_flag("--svg", o.svg, "also write an SVG chart next to the CSV");
}

ScoreParams score_params(const CommonOpts& o) {
    ScoreParams p;
    p.alpha = WeightParams{o.alpha};
    p.beta = o.beta;
    p.trials = o.trials;
    p.base_seed = o.seed;
    p.ec_mode = parse_ec_mode(o.ec_mode);
    return p;
}

nlohmann::json common_params_json(const CommonOpts& o, bool with_scoring) {
    nlohmann::json j;
    j["input"] = o.input;
    j["output"] = o.output;
    j["format"] = o.format;
    if (with_scoring) {
        j["alpha"] = o.alpha;
        j["beta"] = o.beta;
        j["trials"] = o.trials;
        j["seed"] = o.seed;
        j["ec_mode"] = o.ec_mode;
    }
    return j;
}

void write_sidecar(const std::string& command, const std::string& out_path,
                   const nlohmann::json& params, const std::string& input_bytes) {
    write_file(sibling_path(out_path, ".run.json"),
               format_sidecar_json(command, params, sha256_hex(input_bytes), kVersion));
}

int run_validate(const std::string& input, const std::string& format_flag) {
    const std::string bytes = read_file(input);
    const Topology t = parse_topology(bytes, resolve_format(format_flag, input));
    double dmin = t.links.front().distance_km, dmax = dmin;
    for (const Link& l : t.links) {
        dmin = std::min(dmin, l.distance_km);
        dmax = std::max(dmax, l.distance_km);
    }
    char range[64];
    std::snprintf(range, sizeof(range), "min=%g max=%g", dmin, dmax);
    std::cout << "name: " << t.name << "\n"
              << "nodes: " << t.node_count() << "\n"
              << "links: " << t.link_count() << "\n"
              << "connected: yes\n"
              << "distance_km: " << range << "\n";
    return 0;
}

int run_gen(const std::string& output, const std::string& model, int nodes, int links,
            std::uint64_t seed, const std::string& name) {
    const TopologyModel m =
        model == "ring_chords" ? TopologyModel::ring_chords : TopologyModel::grid_diag;
    Topology t = generate_topology(m, nodes, links, seed);
    if (!name.empty()) t.name = name;
    write_file(output, serialize_topology_json(t));
    std::cout << "wrote " << output << " (" << t.node_count() << " nodes, " << t.link_count()
              << " links)\n";
    return 0;
}

int run_rank(const CommonOpts& o) {
    const std::string bytes = read_file(o.input);
    const Topology t = parse_topology(bytes, resolve_format(o.format, o.input));
    const Ranking r = monte_carlo_rank(t, score_params(o), o.threads);
    write_file(o.output, format_ranking_csv(t, r));
    write_sidecar("rank", o.output, common_params_json(o, true), bytes);
    return 0;
}

EndpointMode endpoint_mode_of(const CurveOpts& c) {
    return c.endpoints == "include" ? EndpointMode::include_endpoints
                                    : EndpointMode::interior_only;
}

CpcGraphMode graph_mode_of(const CurveOpts& c) {
    return c.cpc_graph == "distance" ? CpcGraphMode::distance : CpcGraphMode::trials;
}

int run_cpc(const CommonOpts& o, const CurveOpts& c, const std::string& ranking_path) {
    const std::string bytes = read_file(o.input);
    const Topology t = parse_topology(bytes, resolve_format(o.format, o.input));
    const ScoreParams p = score_params(o);
    Ranking r;
    if (ranking_path.empty()) {
        r = monte_carlo_rank(t, p, o.threads);
    } else {
        r = parse_ranking_csv(read_file(ranking_path), t);
        r.params = p;
    }
    const int k_max = c.k_max > 0 ? c.k_max : t.node_count();
    const CpcCurve curve =
        cpc_curve(t, r, k_max, p, endpoint_mode_of(c), graph_mode_of(c), o.threads);
    write_file(o.output, format_cpc_csv(curve));
    if (c.svg) {
        SvgSeries series{"composite", "#1f77b4", {}};
        for (const CpcPoint& pt : curve.points)
            series.points.emplace_back(pt.k, pt.coverage_pct);
        write_file(sibling_path(o.output, ".svg"),
                   svg_line_chart("Cumulative path coverage", "Number of TRNs (K)",
                                  "Coverage (%)", {series}));
    }
    nlohmann::json params = common_params_json(o, true);
    params["k_max"] = k_max;
    params["endpoints"] = c.endpoints;
    params["cpc_graph"] = c.cpc_graph;
    params["ranking"] = ranking_path;
    params["svg"] = c.svg;
    write_sidecar("cpc", o.output, params, bytes);
    return 0;
}

int run_compare(const CommonOpts& o, const CurveOpts& c) {
    const std::string bytes = read_file(o.input);
    const Topology t = parse_topology(bytes, resolve_format(o.format, o.input));
    const int k_max = c.k_max > 0 ? c.k_max : t.node_count();
    const CompareResult cmp = compare_baselines(t, score_params(o), k_max, endpoint_mode_of(c),
                                                graph_mode_of(c), o.threads);
    write_file(o.output, format_compare_csv(cmp));
    if (c.svg) {
        SvgSeries composite{"composite", "#1f77b4", {}};
        SvgSeries degree{"degree", "#d62728", {}};
        for (const CpcPoint& pt : cmp.composite.points)
            composite.points.emplace_back(pt.k, pt.coverage_pct);
        for (const CpcPoint& pt : cmp.degree.points)
            degree.points.emplace_back(pt.k, pt.coverage_pct);
        write_file(sibling_path(o.output, ".svg"),
                   svg_line_chart("Cumulative path coverage: composite vs degree",
                                  "Number of TRNs (K)", "Coverage (%)", {composite, degree}));
    }
    nlohmann::json params = common_params_json(o, true);
    params["k_max"] = k_max;
    params["endpoints"] = c.endpoints;
    params["cpc_graph"] = c.cpc_graph;
    params["svg"] = c.svg;
    write_sidecar("compare", o.output, params, bytes);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("trnplan ") + kVersion +
                 " - reliability-aware trusted-repeater placement planner"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string val_input, val_format = "auto";
    CLI::App* validate = app.add_subcommand("validate", "check a topology file, print stats");
    validate->add_option("input", val_input, "topology file")->required();
    validate->add_option("--format", val_format, "input format")
        ->check(CLI::IsMember({"auto", "json", "edgelist"}))
        ->capture_default_str();

    std::string gen_out, gen_model = "ring_chords", gen_name;
    int gen_nodes = 28, gen_links = 52;
    std::uint64_t gen_seed = 7;
    CLI::App* gen = app.add_subcommand("gen", "generate a synthetic topology JSON");
    gen->add_option("-o,--out", gen_out, "output file")->required();
    gen->add_option("--model", gen_model, "generator model")
        ->check(CLI::IsMember({"ring_chords", "grid_diag"}))
        ->capture_default_str();
    gen->add_option("--nodes", gen_nodes, "node count")->capture_default_str();
    gen->add_option("--links", gen_links, "link count")->capture_default_str();
    gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
    gen->add_option("--name", gen_name, "topology name (default: derived from model)");

    CommonOpts rank_opts;
    CLI::App* rank = app.add_subcommand("rank", "rank TRN candidates by composite score");
    add_common(rank, rank_opts, true);

    CommonOpts cpc_opts;
    CurveOpts cpc_curve_opts;
    std::string cpc_ranking;
    CLI::App* cpc = app.add_subcommand("cpc", "cumulative path coverage curve over K");
    add_common(cpc, cpc_opts, true);
    add_curve(cpc, cpc_curve_opts);
    cpc->add_option("--ranking", cpc_ranking, "reuse a ranking CSV instead of recomputing");

    CommonOpts cmp_opts;
    CurveOpts cmp_curve_opts;
    CLI::App* compare =
        app.add_subcommand("compare", "coverage of composite score vs degree baseline");
    add_common(compare, cmp_opts, true);
    add_curve(compare, cmp_curve_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*validate) return run_validate(val_input, val_format);
        if (*gen) return run_gen(gen_out, gen_model, gen_nodes, gen_links, gen_seed, gen_name);
        if (*rank) return run_rank(rank_opts);
        if (*cpc) return run_cpc(cpc_opts, cpc_curve_opts, cpc_ranking);
        if (*compare) return run_compare(cmp_opts, cmp_curve_opts);
    } catch (const DomainError& e) {
        std::cerr << "trnplan: " << e.what() << "\n";
        return 2;
    } catch (const InvalidParams& e) {
        std::cerr << "trnplan: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "trnplan: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "trnplan: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
