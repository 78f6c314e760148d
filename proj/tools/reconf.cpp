// Command-line front end: build reconfiguration graphs, enumerate cliques,
// run the theorem verifiers over files or generated corpora.
//
// Exit codes: 0 pass, 1 theorem violation, 2 usage/parse error, 3 timeout.

#include <atomic>
#include <chrono>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "reconf/analysis.hpp"
#include "reconf/coloring.hpp"
#include "reconf/corpus.hpp"
#include "reconf/io.hpp"
#include "reconf/isomorphism.hpp"
#include "reconf/planarity.hpp"
#include "reconf/reconstruct.hpp"

namespace {

using namespace reconf;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kDefaultSeed = 0x5eed5eed;

struct RunConfig {
    std::string rule = "ts";
    int k = 2;
    bool k_given = false;
    std::string input;
    std::string output;
    std::string format = "json";
    std::string theorem;
    std::string family = "random-gnp";
    int n = 8;
    int count = 20;
    double edge_probability = 0.5;
    std::uint64_t seed = kDefaultSeed;
    double timeout_seconds = 0;  // 0 = none
    int jobs = 1;
    bool verify = false;
};

struct Timeout {};

struct Deadline {
    Clock::time_point start = Clock::now();
    double limit_seconds = 0;
    void check() const {
        if (limit_seconds > 0 &&
            std::chrono::duration<double>(Clock::now() - start).count() > limit_seconds)
            throw Timeout{};
    }
    long long elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    }
};

Graph load_graph(const std::string& path) { return parse_edge_list(read_file(path)); }

LabeledReconfGraph build_by_rule(const Graph& g, const std::string& rule, int k) {
    if (rule == "ts") return build_ts(g, k);
    if (rule == "tj") return build_tj(g, k);
    if (rule == "tar-lower") return build_tar_lower(g, k);
    if (rule == "tar-upper") return build_tar_upper(g, k);
    if (rule == "simplex") return build_simplex(g);
    throw ValidationError("unknown rule: " + rule);
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty())
        std::cout << content;
    else
        write_file(path, content);
}

int cmd_build(const RunConfig& cfg) {
    auto r = build_by_rule(load_graph(cfg.input), cfg.rule, cfg.k);
    if (cfg.format == "json")
        emit(cfg.output, reconf_to_json(r).dump(2) + "\n");
    else if (cfg.format == "dot")
        emit(cfg.output, to_dot(r.graph));
    else if (cfg.format == "edgelist")
        emit(cfg.output, to_edge_list(r.graph));
    else
        throw ValidationError("unknown format: " + cfg.format);
    return 0;
}

int cmd_cliques(const RunConfig& cfg) {
    Graph g = load_graph(cfg.input);
    std::string out;
    for (const auto& c : enumerate_k_cliques(g, cfg.k)) {
        std::string line;
        for (int v : c.members()) {
            if (!line.empty()) line += ' ';
            line += g.name(v);
        }
        out += line + "\n";
    }
    emit(cfg.output, out);
    return 0;
}

// Decomposition over the maximal cliques of TS_k(g): every complete subgraph
// with >= 3 nodes decomposes, and strictly more than k+1 nodes forces Int.
Report decompose_check(const Graph& g, int k) {
    Report r{.theorem = "decompose"};
    auto ts = build_ts(g, k);
    int checked = 0;
    for (const auto& mc : maximal_cliques(ts.graph)) {
        if (mc.size() < 3) continue;
        std::vector<Clique> nodes;
        for (int idx : mc.members()) nodes.push_back(ts.labels[idx]);
        auto d = decompose_ts_clique(g, nodes, k);
        ++checked;
        if (mc.size() > k + 1 && d.kind != CliqueDecomposition::Kind::Int) {
            r.pass = false;
            r.witness = {{"nodes", mc.size()}, {"kind", "Uni"}};
            return r;
        }
    }
    r.values = {{"k", k}, {"cliques_checked", checked}};
    return r;
}

Report median_check(const Graph& g) {
    Report r{.theorem = "median"};
    auto tar = build_simplex(g);
    bool median = is_median_graph(tar.graph);
    bool bipartite = is_bipartite(tar.graph);
    r.values = {{"nodes", tar.graph.vertex_count()}, {"median", median}, {"bipartite", bipartite}};
    r.pass = median && bipartite;
    return r;
}

Report sandwich_check(const Graph& g, int k) {
    Report r{.theorem = "chromatic-sandwich"};
    try {
        auto s = chromatic_sandwich(g, k);
        r.values = {{"k", k}, {"lower", s.lower}, {"exact", s.exact}, {"upper", s.upper}};
    } catch (const std::logic_error& e) {
        r.pass = false;
        r.witness = {{"error", e.what()}};
    }
    return r;
}

Report diamond_check(const Graph& g) {
    Report r{.theorem = "diamond-free"};
    auto tj = build_tj(g, std::max(clique_number(g), 1));
    r.values["nodes"] = tj.graph.vertex_count();
    if (auto d = has_induced_diamond(tj.graph)) {
        r.pass = false;
        auto arr = nlohmann::ordered_json::array();
        for (int v : *d) arr.push_back(tj.node_name(v));
        r.witness = {{"diamond", arr}};
    }
    return r;
}

Report run_theorem(const std::string& theorem, const Graph& g, int k) {
    if (theorem == "omega-formula") return verify_omega_formula(g, k);
    if (theorem == "sandwich") return sandwich_check(g, k);
    if (theorem == "diamond-free") return diamond_check(g);
    if (theorem == "duality") return verify_ts_tj_vertex_edge_duality(g, k);
    if (theorem == "triangle-bounds") return triangle_bounds_check(g);
    if (theorem == "tj4") return tj4_structure_check(g);
    if (theorem == "ts-planar") return ts_planarity_check(g, k);
    if (theorem == "median") return median_check(g);
    if (theorem == "decompose") return decompose_check(g, k);
    if (theorem == "triangle-intersections") {
        auto tj = build_tj(g, std::max(clique_number(g), 1));
        return verify_tj_triangle_intersections(tj);
    }
    if (theorem == "reconstruction") return verify_reconstruction(g);
    throw ValidationError("unknown theorem: " + theorem);
}

nlohmann::ordered_json report_json(const Report& r, const std::string& input, std::uint64_t seed,
                                   long long elapsed_ms) {
    auto j = r.to_json();
    j["input"] = input;
    j["seed"] = seed;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

int cmd_verify(const RunConfig& cfg, const Deadline& deadline) {
    Graph g = load_graph(cfg.input);
    deadline.check();
    Report r = run_theorem(cfg.theorem, g, cfg.k);
    std::cout << report_json(r, cfg.input, cfg.seed, deadline.elapsed_ms()).dump(2) << "\n";
    return r.pass ? 0 : 1;
}

int cmd_reconstruct(const RunConfig& cfg) {
    if (cfg.verify) {
        Graph g = load_graph(cfg.input);
        Report r = verify_reconstruction(g);
        std::cout << report_json(r, cfg.input, cfg.seed, 0).dump(2) << "\n";
        return r.pass ? 0 : 1;
    }
    Graph t = load_graph(cfg.input);
    auto res = reconstruct_ts(t, cfg.k);
    if (auto* bad = std::get_if<NotKGood>(&res)) {
        std::cout << bad->to_json(t).dump(2) << "\n";
        return 1;
    }
    emit(cfg.output, to_edge_list(std::get<Graph>(res)));
    return 0;
}

int cmd_corpus(const RunConfig& cfg, const Deadline& deadline) {
    auto family = family_from_name(cfg.family);
    auto graphs = generate_corpus(family, cfg.n, cfg.count, cfg.seed, cfg.edge_probability);
    std::cout << "# corpus family=" << cfg.family << " n=" << cfg.n << " count=" << cfg.count
              << " seed=" << cfg.seed << " theorem=" << (cfg.theorem.empty() ? "-" : cfg.theorem)
              << "\n";
    if (cfg.theorem.empty()) {
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            deadline.check();
            std::cout << "graph " << i << ": |V|=" << graphs[i].vertex_count()
                      << " |E|=" << graphs[i].edge_count() << "\n";
        }
        return 0;
    }

    // Fan out across workers; results are reported in input order.
    std::vector<Report> reports(graphs.size());
    std::vector<std::string> errors(graphs.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> timed_out{false};
    int jobs = std::max(1, cfg.jobs);
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= graphs.size() || timed_out.load()) return;
            try {
                deadline.check();
                reports[i] = run_theorem(cfg.theorem, graphs[i], cfg.k);
            } catch (const Timeout&) {
                timed_out.store(true);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    int violations = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (timed_out.load() && reports[i].theorem.empty() && errors[i].empty()) break;
        if (!errors[i].empty()) {
            std::cout << "graph " << i << ": error " << errors[i] << "\n";
            ++violations;
            continue;
        }
        std::cout << "graph " << i << ": " << (reports[i].pass ? "pass" : "FAIL");
        if (!reports[i].pass) {
            ++violations;
            std::cout << " " << report_json(reports[i], "corpus[" + std::to_string(i) + "]",
                                            cfg.seed, deadline.elapsed_ms())
                                 .dump();
        }
        std::cout << "\n";
    }
    if (timed_out.load()) throw Timeout{};
    return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reconfiguration graphs of cliques: builders and theorem verifiers"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--timeout", cfg.timeout_seconds, "wall-clock limit in seconds (exit 3)");

    auto* build = app.add_subcommand("build", "build a reconfiguration graph from an edge list");
    build->add_option("--rule", cfg.rule, "ts|tj|tar-lower|tar-upper|simplex");
    build->add_option("--k", cfg.k, "clique size / TAR threshold");
    build->add_option("--in", cfg.input, "input edge-list file")->required();
    build->add_option("--out", cfg.output, "output file (default: stdout)");
    build->add_option("--format", cfg.format, "dot|json|edgelist");

    auto* cliques = app.add_subcommand("cliques", "enumerate size-k cliques");
    cliques->add_option("--size", cfg.k, "clique size")->required();
    cliques->add_option("--in", cfg.input, "input edge-list file")->required();
    cliques->add_option("--out", cfg.output, "output file (default: stdout)");

    auto* reconstruct = app.add_subcommand("reconstruct", "rebuild TS_{k-1} from an unlabeled TJ_k graph");
    reconstruct->add_option("--k", cfg.k, "clique size of the TJ graph");
    reconstruct->add_option("--in", cfg.input, "input edge-list file")->required();
    reconstruct->add_option("--out", cfg.output, "output edge-list (default: stdout)");
    reconstruct->add_flag("--verify", cfg.verify,
                          "treat --in as a base graph and run the full round-trip check");

    auto* verify = app.add_subcommand("verify", "check one theorem on one graph");
    verify
        ->add_option("--theorem", cfg.theorem,
                     "omega-formula|sandwich|diamond-free|duality|triangle-bounds|tj4|ts-planar|"
                     "median|decompose|triangle-intersections|reconstruction")
        ->required();
    verify->add_option("--in", cfg.input, "input edge-list file")->required();
    verify->add_option("--k", cfg.k, "parameter k where the theorem needs one");

    auto* corpus = app.add_subcommand("corpus", "generate seeded graphs and optionally verify each");
    corpus->add_option("--family", cfg.family, "random-gnp|planar|bipartite|trees");
    corpus->add_option("--n", cfg.n, "vertices per graph");
    corpus->add_option("--count", cfg.count, "number of graphs");
    corpus->add_option("--seed", cfg.seed, "RNG seed (fixed default: deterministic)");
    corpus->add_option("--p", cfg.edge_probability, "edge probability for random-gnp/bipartite");
    corpus->add_option("--theorem", cfg.theorem, "theorem to check on every graph");
    corpus->add_option("--k", cfg.k, "parameter k where the theorem needs one");
    corpus->add_option("--jobs", cfg.jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Deadline deadline{Clock::now(), cfg.timeout_seconds};
    try {
        if (*build) return cmd_build(cfg);
        if (*cliques) return cmd_cliques(cfg);
        if (*reconstruct) return cmd_reconstruct(cfg);
        if (*verify) return cmd_verify(cfg, deadline);
        if (*corpus) return cmd_corpus(cfg, deadline);
    } catch (const Timeout&) {
        std::cerr << "timeout after " << cfg.timeout_seconds << "s\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
