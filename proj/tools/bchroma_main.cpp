// Command-line front end: generate family instances, compute and check
// b-colorings, and run the claim-verification suite.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bchroma/bcolor.hpp"
#include "bchroma/edgelist.hpp"
#include "bchroma/families.hpp"
#include "bchroma/graph.hpp"
#include "bchroma/verify.hpp"

namespace {

using bchroma::Graph;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;   // solver/oracle disagreement
constexpr int kExitUsage = 2;      // bad input, bad file, bad parameters
constexpr int kExitRefuted = 10;   // verify: refutations present
constexpr int kExitTimeout = 20;   // undecided searches present

/// Writes via a temp file plus rename so readers never observe a torn file.
void write_atomically(const std::string& path, const std::string& content) {
    std::filesystem::path target(path);
    std::filesystem::path temp = target;
    temp += ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open " + temp.string() + " for writing");
        }
        out << content;
        if (!out.flush()) {
            throw std::runtime_error("write to " + temp.string() + " failed");
        }
    }
    std::filesystem::rename(temp, target);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Graph load_graph(const std::string& path) {
    return bchroma::parse_edgelist(read_file(path));
}

std::vector<int> parse_csv_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        out.push_back(std::stoi(item));
    }
    if (out.empty()) {
        throw std::runtime_error("expected a comma-separated vertex list, got \"" + text + "\"");
    }
    return out;
}

struct GenArgs {
    std::string family;
    std::vector<int> params;
    std::string out_path;
    std::string in_path;
    std::string in_path_b;
    int vertex_v = 1;
    int vertex_u = 1;
    std::vector<std::string> subset_specs;
    bool shared_edge_adjacent = false;
};

int run_gen(const GenArgs& args) {
    Graph graph;
    std::optional<bchroma::Digraph> digraph;
    if (args.family == "jaco") {
        if (args.params.size() != 3) {
            throw std::runtime_error("gen jaco needs: n m c");
        }
        digraph = bchroma::jaco({args.params[0], args.params[1], args.params[2]});
        graph = bchroma::underlying(*digraph);
    } else if (args.family == "ornated") {
        if (args.params.size() < 2) {
            throw std::runtime_error("gen ornated needs: n a1 [a2 ...]");
        }
        bchroma::OrnatedString s{{args.params.begin() + 1, args.params.end()}};
        digraph = bchroma::ornated(args.params[0], s);
        graph = bchroma::underlying(*digraph);
    } else if (args.family == "rasta") {
        graph = bchroma::rasta({args.params});
    } else if (args.family == "setgraph") {
        if (args.params.size() != 1) {
            throw std::runtime_error("gen setgraph needs: n");
        }
        graph = bchroma::set_graph(args.params[0]);
    } else if (args.family == "edgesetgraph") {
        if (args.in_path.empty()) {
            throw std::runtime_error("gen edgesetgraph needs -i INPUT.el");
        }
        graph = bchroma::edge_set_graph(load_graph(args.in_path), args.shared_edge_adjacent);
    } else if (args.family == "chithra") {
        if (args.in_path.empty() || args.subset_specs.empty()) {
            throw std::runtime_error("gen chithra needs -i INPUT.el and at least one --w subset");
        }
        bchroma::ChithraSpec spec;
        spec.base = load_graph(args.in_path);
        for (const std::string& w : args.subset_specs) {
            spec.subsets.push_back(parse_csv_ints(w));
        }
        graph = bchroma::chithra(spec);
    } else if (args.family == "edgejoint") {
        if (args.in_path.empty() || args.in_path_b.empty()) {
            throw std::runtime_error("gen edgejoint needs -a LEFT.el and -b RIGHT.el");
        }
        graph = bchroma::edge_joint(load_graph(args.in_path), args.vertex_v,
                                    load_graph(args.in_path_b), args.vertex_u);
    } else {
        graph = bchroma::classic(args.family, args.params);
    }
    std::string text = bchroma::emit_edgelist(graph);
    if (args.out_path.empty()) {
        std::cout << text;
    } else {
        write_atomically(args.out_path, text);
        if (digraph) {
            write_atomically(args.out_path + ".arcs", bchroma::emit_arclist(*digraph));
        }
    }
    std::cout << "vertices " << graph.vertex_count() << " edges " << graph.edge_count() << "\n";
    return kExitOk;
}

std::string format_int_set(const std::vector<int>& values) {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) {
            out << ',';
        }
        out << values[i];
    }
    out << '}';
    return out.str();
}

int run_phi(const std::string& path, bool oracle, bool spectrum, long long budget,
            const std::string& witness_path) {
    Graph graph = load_graph(path);
    bchroma::SearchLimits limits{budget};
    bchroma::PhiOutcome outcome = bchroma::phi(graph, limits);
    if (outcome.status == bchroma::SearchStatus::kTimeout) {
        std::cout << "phi undecided: ";
        if (outcome.best) {
            std::cout << "at least " << outcome.best->phi << ", ";
        }
        std::cout << "search ran out of budget for k in " << format_int_set(outcome.undecided)
                  << "\n";
        return kExitTimeout;
    }
    const bchroma::PhiResult& result = *outcome.best;
    std::cout << "phi " << result.phi << "\n";
    if (oracle) {
        if (graph.vertex_count() > 9) {
            std::cerr << "error: --oracle is limited to graphs with at most 9 vertices\n";
            return kExitUsage;
        }
        int reference = bchroma::phi_oracle(graph);
        std::cout << "oracle " << reference << " ("
                  << (reference == result.phi ? "agrees" : "DISAGREES") << ")\n";
        if (reference != result.phi) {
            return kExitInternal;
        }
    }
    if (spectrum) {
        bchroma::SpectrumResult s = bchroma::b_spectrum(graph, limits);
        std::cout << "spectrum " << format_int_set(s.feasible);
        if (!s.undecided.empty()) {
            std::cout << " undecided " << format_int_set(s.undecided);
        }
        std::cout << "\n";
    }
    if (!witness_path.empty()) {
        nlohmann::ordered_json out;
        out["phi"] = result.phi;
        out["k"] = result.witness.k;
        out["colors"] = result.witness.colors;
        out["b_vertices"] = nlohmann::ordered_json::object();
        for (const auto& [color, vertex] : result.b_vertex_of) {
            out["b_vertices"][std::to_string(color)] = vertex;
        }
        write_atomically(witness_path, out.dump(2) + "\n");
    }
    return kExitOk;
}

int run_check(const std::string& graph_path, const std::string& coloring_path) {
    Graph graph = load_graph(graph_path);
    nlohmann::json doc = nlohmann::json::parse(read_file(coloring_path));
    bchroma::Coloring coloring;
    coloring.k = doc.at("k").get<int>();
    coloring.colors = doc.at("colors").get<std::vector<int>>();
    if (static_cast<int>(coloring.colors.size()) != graph.vertex_count()) {
        throw std::runtime_error("coloring lists " + std::to_string(coloring.colors.size()) +
                                 " vertices but the graph has " +
                                 std::to_string(graph.vertex_count()));
    }
    bool proper = true;
    for (const auto& [u, v] : graph.edges()) {
        if (coloring.colors[u - 1] == coloring.colors[v - 1]) {
            std::cout << "proper: no (edge " << u << "-" << v << " is monochromatic)\n";
            proper = false;
            break;
        }
    }
    if (proper) {
        std::cout << "proper: yes\n";
    }
    std::vector<bool> used(static_cast<size_t>(coloring.k) + 1, false);
    for (int c : coloring.colors) {
        if (c >= 1 && c <= coloring.k) {
            used[static_cast<size_t>(c)] = true;
        }
    }
    int missing = 0;
    for (int c = 1; c <= coloring.k; ++c) {
        if (!used[static_cast<size_t>(c)]) {
            missing = c;
            break;
        }
    }
    if (missing) {
        std::cout << "surjective: no (color " << missing << " unused)\n";
    } else {
        std::cout << "surjective: yes\n";
    }
    if (!proper || missing) {
        std::cout << "b-coloring: no\n";
        return kExitOk;
    }
    auto classes = bchroma::b_vertices(graph, coloring);
    for (int c = 1; c <= coloring.k; ++c) {
        const auto& verts = classes.at(c);
        if (verts.empty()) {
            std::cout << "b-coloring: no (class " << c << " has no b-vertex)\n";
            return kExitOk;
        }
    }
    std::cout << "b-coloring: yes\n";
    for (int c = 1; c <= coloring.k; ++c) {
        std::cout << "class " << c << ": b-vertex " << classes.at(c).front() << "\n";
    }
    return kExitOk;
}

int run_verify(const std::vector<std::string>& claim_names, std::optional<int> max_n,
               std::optional<int> exact_n, long long budget, int workers, bool deterministic,
               bool linked, const std::string& json_path) {
    bchroma::SuiteConfig config;
    config.claims.clear();
    for (const std::string& name : claim_names) {
        if (name == "all") {
            config.claims = bchroma::all_claims();
            break;
        }
        auto id = bchroma::claim_from_string(name);
        if (!id) {
            throw std::runtime_error("unknown claim id \"" + name + "\"");
        }
        config.claims.push_back(*id);
    }
    if (config.claims.empty()) {
        config.claims = bchroma::all_claims();
    }
    config.max_n = max_n;
    config.exact_n = exact_n;
    config.node_budget = budget;
    config.workers = workers;
    config.deterministic = deterministic;
    config.linked_definition = linked;
    bchroma::Report report;
    try {
        report = bchroma::run_suite(config);
    } catch (const bchroma::OracleMismatchError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    std::cout << bchroma::emit_report(report, bchroma::ReportFormat::kText);
    if (!json_path.empty()) {
        write_atomically(json_path, bchroma::emit_report(report, bchroma::ReportFormat::kJson));
    }
    return bchroma::report_exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph family generators, an exact b-chromatic solver, and a claim checker"};
    app.require_subcommand(1);

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "generate a family instance as an edge-list file");
    gen->add_option("family", gen_args.family,
                    "path|cycle|complete|complete_bipartite|edgeless|wheel|sunlet|sun|helm|"
                    "jaco|ornated|rasta|setgraph|edgesetgraph|chithra|edgejoint")
        ->required();
    gen->add_option("params", gen_args.params, "integer parameters of the family");
    gen->add_option("-o,--out", gen_args.out_path, "output path (stdout when omitted)");
    gen->add_option("-i,--in", gen_args.in_path, "input graph (edgesetgraph, chithra)");
    gen->add_option("-a,--left", gen_args.in_path, "left input graph (edgejoint)");
    gen->add_option("-b,--right", gen_args.in_path_b, "right input graph (edgejoint)");
    gen->add_option("-v,--vertex-v", gen_args.vertex_v, "attachment vertex in the left graph");
    gen->add_option("-u,--vertex-u", gen_args.vertex_u, "attachment vertex in the right graph");
    gen->add_option("--w", gen_args.subset_specs,
                    "chithra subset, comma-separated vertices; repeat per subset");
    gen->add_flag("--shared-edge-adjacent", gen_args.shared_edge_adjacent,
                  "edge-set graph: subsets sharing an edge count as adjacent");

    std::string phi_path;
    bool phi_oracle_flag = false;
    bool phi_spectrum = false;
    bool deterministic = false;
    long long budget = 50'000'000;
    std::string witness_path;
    CLI::App* phi_cmd = app.add_subcommand("phi", "compute the b-chromatic number of a graph file");
    phi_cmd->add_option("graph", phi_path, "edge-list file")->required();
    phi_cmd->add_flag("--oracle", phi_oracle_flag, "cross-check against the exhaustive oracle (n <= 9)");
    phi_cmd->add_flag("--spectrum", phi_spectrum, "also print the set of feasible k");
    phi_cmd->add_option("--budget", budget, "search node budget per k");
    phi_cmd->add_option("--witness", witness_path, "write the witness coloring as JSON");
    phi_cmd->add_flag("--deterministic", deterministic,
                      "pin witnesses across runs (searches are sequential and ordered)");

    std::string check_graph;
    std::string check_coloring;
    CLI::App* check_cmd = app.add_subcommand("check", "check a proposed coloring of a graph");
    check_cmd->add_option("graph", check_graph, "edge-list file")->required();
    check_cmd->add_option("coloring", check_coloring, "coloring JSON: {\"k\":int,\"colors\":[...]}")
        ->required();

    std::vector<std::string> claim_names;
    std::optional<int> max_n;
    std::optional<int> exact_n;
    int workers = 1;
    bool linked = false;
    std::string json_path;
    CLI::App* verify_cmd = app.add_subcommand("verify", "evaluate claims over their default grids");
    verify_cmd->add_option("--claims", claim_names, "claim ids or \"all\"")
        ->delimiter(',')
        ->required();
    verify_cmd->add_option("--max-n", max_n, "cap size-style parameters");
    verify_cmd->add_option("--n", exact_n, "only instances with this size parameter");
    verify_cmd->add_option("--budget", budget, "search node budget per k");
    verify_cmd->add_option("--workers", workers, "parallel instance evaluations")
        ->envname("BCHROMA_WORKERS");
    verify_cmd->add_flag("--deterministic", deterministic,
                         "byte-stable output (zeroes the timing fields)");
    verify_cmd->add_flag("--weak-bdef", linked,
                         "evaluate under the relaxed pairwise-linkage definition");
    verify_cmd->add_option("--json", json_path, "also write the report as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            return run_gen(gen_args);
        }
        if (phi_cmd->parsed()) {
            return run_phi(phi_path, phi_oracle_flag, phi_spectrum, budget, witness_path);
        }
        if (check_cmd->parsed()) {
            return run_check(check_graph, check_coloring);
        }
        if (verify_cmd->parsed()) {
            return run_verify(claim_names, max_n, exact_n, budget, workers, deterministic, linked,
                              json_path);
        }
    } catch (const bchroma::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
