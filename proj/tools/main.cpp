// semistrong: command-line front end for the tree program, the exact
// solvers, verification and the gadget reduction.
//
// Exit codes: 0 success, 2 bad input or usage, 3 verification failure or
// wrong graph type, 4 inconclusive (node budget).

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "report_json.hpp"
#include "semistrong/coloring.hpp"
#include "semistrong/exact_solver.hpp"
#include "semistrong/graph.hpp"
#include "semistrong/reduction.hpp"
#include "semistrong/tree_dp.hpp"

using namespace semistrong;
using semistrong::cli::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kBadInput = 2;
constexpr int kFailed = 3;
constexpr int kUnknown = 4;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TypeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

struct LoadedGraph {
    Graph graph;
    std::string digest;
};

LoadedGraph load_graph(const std::string& path) {
    const std::string text = slurp(path);
    return {parse_graph(text), cli::digest(text)};
}

ColoringKind kind_from(const std::string& name) {
    const auto k = parse_coloring_kind(name);
    if (!k) throw InputError("unknown coloring kind '" + name + "' (proper, ur, semistrong, strong)");
    return *k;
}

double millis_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

// ---- solve -----------------------------------------------------------------------

struct SolveOptions {
    std::string input;
    std::optional<std::size_t> budget;
    std::string emit;
    std::size_t root = 0;
    bool json = false;
    bool timings = false;
};

int run_solve(const SolveOptions& o) {
    const LoadedGraph in = load_graph(o.input);
    const Graph& g = in.graph;
    if (g.vertex_count() == 0) throw TypeError("not a tree: empty graph");
    if (o.root >= g.vertex_count()) throw InputError("root out of range");
    const RootedTree tree = root_tree(g, o.root);
    const std::size_t delta = g.max_degree();

    ordered_json j;
    j["command"] = "solve";
    j["input_digest"] = in.digest;
    j["vertices"] = g.vertex_count();
    j["max_degree"] = delta;

    double solve_ms = 0, rebuild_ms = 0;
    std::optional<Reconstruction> rec;
    std::optional<Quadruple> tuple;
    auto attempt = [&](std::size_t K) {
        const auto t0 = std::chrono::steady_clock::now();
        const TreeSolution sol = solve_tree(tree, K);
        solve_ms += millis_since(t0);
        if (!sol.feasible()) return false;
        tuple = sol.root_set().entries().front();
        const auto t1 = std::chrono::steady_clock::now();
        rec = reconstruct_coloring(sol, *tuple);
        rebuild_ms += millis_since(t1);
        return true;
    };

    std::string human;
    if (o.budget) {
        const std::size_t K = *o.budget;
        // Below the maximum degree not even a proper coloring exists.
        const bool feasible = g.edge_count() == 0 || (K >= delta && attempt(K));
        j["budget"] = K;
        j["feasible"] = feasible;
        human = feasible ? "feasible" : "infeasible";
    } else if (g.edge_count() == 0) {
        j["index"] = 0;
        j["budget_used"] = 0;
        human = "index 0";
    } else {
        std::size_t index = delta;
        if (!attempt(delta)) {
            index = delta + 1;
            if (!attempt(index)) throw std::logic_error("tree program rejected budget max degree + 1");
        }
        j["index"] = index;
        j["budget_used"] = index;
        human = "index " + std::to_string(index);
    }
    if (tuple) j["root_tuple"] = cli::to_json(*tuple);
    if (o.timings) j["timings"] = {{"solve_ms", solve_ms}, {"reconstruct_ms", rebuild_ms}};
    if (!o.emit.empty() && rec) write_coloring_file(o.emit, rec->coloring);

    if (o.json) print_json(j);
    else std::cout << human << '\n';
    return kOk;
}

// ---- exact -----------------------------------------------------------------------

struct ExactOptions {
    std::string kind;
    std::string input;
    std::optional<std::size_t> palette;
    bool enumerate = false;
    std::uint64_t node_budget = 0;
    std::uint64_t cap = 0;
    bool no_symmetry = false;
    std::string emit;
    bool json = false;
};

int run_exact(const ExactOptions& o) {
    const LoadedGraph in = load_graph(o.input);
    SolveRequest req;
    req.graph = in.graph;
    req.kind = kind_from(o.kind);
    req.limits.node_budget = o.node_budget;
    req.limits.solution_cap = o.cap;
    req.symmetry_reduction = !o.no_symmetry;

    ordered_json j;
    j["command"] = "exact";
    j["input_digest"] = in.digest;
    j["kind"] = std::string(to_string(req.kind));
    std::string human;
    int code = kOk;
    std::optional<EdgeColoring> witness;

    if (o.enumerate) {
        if (!o.palette) throw InputError("--enumerate needs --palette");
        req.mode = SolveMode::enumerate;
        req.palette_size = *o.palette;
        const EnumerateResult r = enumerate(req, [](const EdgeColoring&) { return true; });
        static const char* const ends[] = {"exhausted", "cap_reached", "budget_exhausted"};
        j["palette"] = req.palette_size;
        j["count"] = r.count;
        j["end"] = ends[static_cast<int>(r.end)];
        j["nodes"] = r.nodes;
        human = "count " + std::to_string(r.count);
        if (r.end == EnumerationEnd::cap_reached) human += " (cap reached)";
        if (r.end == EnumerationEnd::budget_exhausted) {
            human += " (node budget exhausted)";
            code = kUnknown;
        }
    } else if (o.palette) {
        req.mode = SolveMode::decide;
        req.palette_size = *o.palette;
        DecideResult r = decide(req);
        j["palette"] = req.palette_size;
        j["outcome"] = std::string(to_string(r.outcome));
        j["nodes"] = r.nodes;
        human = std::string(to_string(r.outcome));
        if (r.outcome == Outcome::unknown) code = kUnknown;
        witness = std::move(r.witness);
    } else if (in.graph.edge_count() == 0) {
        j["outcome"] = "feasible";
        j["colors"] = 0;
        human = "0";
    } else {
        req.mode = SolveMode::minimize;
        MinimizeResult r = min_colors(req);
        j["outcome"] = std::string(to_string(r.outcome));
        if (r.outcome == Outcome::feasible) j["colors"] = r.colors;
        j["nodes"] = r.nodes;
        human = r.outcome == Outcome::feasible ? std::to_string(r.colors) : "unknown";
        if (r.outcome == Outcome::unknown) code = kUnknown;
        witness = std::move(r.witness);
    }
    if (!o.emit.empty() && witness) write_coloring_file(o.emit, *witness);
    if (o.json) print_json(j);
    else std::cout << human << '\n';
    return code;
}

// ---- verify ----------------------------------------------------------------------

int run_verify(const std::string& kind_name, const std::string& input, const std::string& coloring, bool json) {
    const LoadedGraph in = load_graph(input);
    const ColoringKind kind = kind_from(kind_name);
    const EdgeColoring phi = parse_coloring(slurp(coloring), in.graph.edge_count());
    const VerifyResult r = verify_coloring(in.graph, phi, kind);
    ordered_json j;
    j["command"] = "verify";
    j["input_digest"] = in.digest;
    j["kind"] = std::string(to_string(kind));
    j["pass"] = r.ok;
    if (r.violation)
        j["violation"] = {{"edge", r.violation->edge}, {"color", r.violation->color}, {"message", r.violation->message}};
    if (json) print_json(j);
    else if (r.ok) std::cout << "pass\n";
    else
        std::cout << "fail: edge " << r.violation->edge << " (color " << r.violation->color
                  << "): " << r.violation->message << '\n';
    return r.ok ? kOk : kFailed;
}

// ---- reduce ----------------------------------------------------------------------

struct ReduceOptions {
    std::size_t k = 0;
    std::string input;
    std::string output;
    std::string map;
    std::string lift;
    std::string extract;
    std::string emit;
    bool json = false;
};

int run_reduce(const ReduceOptions& o) {
    const LoadedGraph in = load_graph(o.input);
    if (!in.graph.is_regular(o.k)) throw TypeError("input is not " + std::to_string(o.k) + "-regular");
    const ReductionMap map = reduce(in.graph, o.k);
    if (!o.output.empty()) write_graph_file(o.output, map.target);
    if (!o.map.empty()) spill(o.map, cli::to_json(map).dump(2) + "\n");

    ordered_json j;
    j["command"] = "reduce";
    j["input_digest"] = in.digest;
    j["k"] = o.k;
    j["gadget_kind"] = std::string(to_string(map.gadget.kind));
    j["vertices"] = map.target.vertex_count();
    j["edges"] = map.target.edge_count();
    j["max_degree"] = map.target.max_degree();
    std::string extra;
    if (!o.lift.empty()) {
        const EdgeColoring phi = parse_coloring(slurp(o.lift), in.graph.edge_count());
        const EdgeColoring psi = lift_coloring(map, phi);
        const bool ok = static_cast<bool>(verify_coloring(map.target, psi, ColoringKind::semistrong));
        j["lifted_semistrong"] = ok;
        if (!o.emit.empty()) write_coloring_file(o.emit, psi);
        extra = ok ? "\nlifted coloring: semistrong" : "\nlifted coloring: NOT semistrong";
        if (!ok) {
            if (o.json) print_json(j);
            else std::cout << "lifted coloring is not semistrong\n";
            return kFailed;
        }
    }
    if (!o.extract.empty()) {
        const EdgeColoring psi = parse_coloring(slurp(o.extract), map.target.edge_count());
        const EdgeColoring phi = extract_coloring(map, psi);
        j["extracted_proper"] = true;
        if (!o.emit.empty()) write_coloring_file(o.emit, phi);
        extra += "\nextracted coloring: proper";
    }
    if (o.json) print_json(j);
    else
        std::cout << "H: " << map.target.vertex_count() << " vertices, " << map.target.edge_count()
                  << " edges, max degree " << map.target.max_degree() << extra << '\n';
    return kOk;
}

// ---- gadget ----------------------------------------------------------------------

struct GadgetOptions {
    std::string kind;
    std::size_t k = 0;
    std::string output;
    std::string map;
    bool augmented = false;
    bool verify = false;
    std::uint64_t node_budget = 0;
    bool json = false;
};

GadgetKind gadget_kind_from(const std::string& name) {
    if (name == "B" || name == "b") return GadgetKind::B;
    if (name == "Q" || name == "q") return GadgetKind::Q;
    if (name == "R" || name == "r") return GadgetKind::R;
    throw InputError("unknown gadget kind '" + name + "' (B, Q, R)");
}

int run_gadget(const GadgetOptions& o) {
    const GadgetKind kind = gadget_kind_from(o.kind);
    Gadget gadget;
    try {
        gadget = build_gadget(kind, o.k);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    if (o.augmented) gadget = augment_with_pendants(gadget);
    if (!o.output.empty()) write_graph_file(o.output, gadget.graph);
    if (!o.map.empty()) spill(o.map, cli::to_json(gadget).dump(2) + "\n");

    if (!o.verify) {
        if (o.json) print_json(cli::to_json(gadget));
        else
            std::cout << to_string(kind) << " gadget, k=" << o.k << ": " << gadget.graph.vertex_count() << " vertices, "
                      << gadget.graph.edge_count() << " edges\n";
        return kOk;
    }
    const LemmaReport report = verify_gadget_lemmas(kind, o.k, o.node_budget);
    if (o.json) {
        print_json(cli::to_json(report));
    } else {
        for (const LemmaRun& r : report.runs) {
            std::cout << r.graph_name << ": " << r.edge_count << " edges, " << r.colorings << " colorings"
                      << (r.end == EnumerationEnd::exhausted ? "" : " (incomplete)") << '\n';
            for (const LemmaCheck& c : r.checks)
                std::cout << "  " << c.name << ": " << c.violations << " violations\n";
            for (const LemmaCheck& c : r.observations)
                std::cout << "  [observed] " << c.name << ": fails in " << c.violations << " of " << c.checked << '\n';
        }
        std::cout << (report.structure_falsified() ? "structure falsified"
                      : report.complete()         ? "all claims hold"
                                                  : "inconclusive")
                  << '\n';
    }
    if (report.structure_falsified()) return kFailed;
    return report.complete() ? kOk : kUnknown;
}

// ---- gen -------------------------------------------------------------------------

struct GenOptions {
    std::string family;
    std::size_t n = 0, a = 0, b = 0, dim = 0;
    std::optional<std::size_t> delta;
    std::uint64_t seed = 1;
    double p = 0.5;
    std::vector<std::size_t> offsets;
    std::string output;
};

Graph generate(const GenOptions& o) {
    const std::string& f = o.family;
    if (f == "path") return path_graph(o.n);
    if (f == "cycle") return cycle_graph(o.n);
    if (f == "star") return star_graph(o.n);
    if (f == "complete") return complete_graph(o.n);
    if (f == "complete-bipartite") return complete_bipartite_graph(o.a, o.b);
    if (f == "random-tree") return o.delta ? random_tree_bounded(o.n, *o.delta, o.seed) : random_tree(o.n, o.seed);
    if (f == "circulant") return circulant_graph(o.n, o.offsets);
    if (f == "petersen") return petersen_graph();
    if (f == "hypercube") return hypercube_graph(o.dim);
    if (f == "random-graph") return random_graph(o.n, o.p, o.seed);
    throw InputError("unknown family '" + f + "'");
}

int run_gen(const GenOptions& o) {
    Graph g;
    try {
        g = generate(o);
    } catch (const GraphError& e) {
        throw InputError(e.what());
    }
    std::string header = "# " + o.family;
    if (o.family == "random-tree" || o.family == "random-graph") header += " seed=" + std::to_string(o.seed);
    const std::string text = header + "\n" + render_graph(g);
    if (o.output.empty()) std::cout << text;
    else spill(o.output, text);
    return kOk;
}

// ---- bench -----------------------------------------------------------------------

struct BenchOptions {
    std::string family = "random-tree";
    std::vector<std::size_t> sizes{25000, 50000, 100000, 200000};
    std::size_t delta = 8;
    std::optional<std::size_t> budget;
    std::uint64_t seed = 1;
    std::size_t repeat = 1;
};

int run_bench(const BenchOptions& o) {
    std::cout << "family,n,delta,budget,feasible,millis\n";
    for (std::size_t n : o.sizes) {
        Graph g;
        if (o.family == "random-tree") g = random_tree_bounded(n, o.delta, o.seed);
        else if (o.family == "path") g = path_graph(n);
        else if (o.family == "star") g = star_graph(n);
        else throw InputError("bench family must be random-tree, path or star");
        const RootedTree tree = root_tree(g, 0);
        const std::size_t delta = g.max_degree();
        // Default budget max degree + 1 always runs the whole program.
        const std::size_t K = o.budget.value_or(delta + 1);
        if (K < delta) throw InputError("budget below the maximum degree");
        double best = -1;
        bool feasible = false;
        for (std::size_t r = 0; r < std::max<std::size_t>(1, o.repeat); ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            feasible = solve_tree(tree, K).feasible();
            const double ms = millis_since(t0);
            if (best < 0 || ms < best) best = ms;
        }
        std::cout << o.family << ',' << n << ',' << delta << ',' << K << ',' << (feasible ? 1 : 0) << ','
                  << static_cast<long long>(best + 0.5) << '\n';
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semistrong edge coloring: tree program, exact solvers, verification, reductions"};
    app.require_subcommand(1);

    SolveOptions so;
    auto* solve = app.add_subcommand("solve", "Semistrong chromatic index of a tree");
    solve->add_option("-i,--input", so.input, "Graph file")->required();
    solve->add_option("-K,--budget", so.budget, "Only decide feasibility with this many colors");
    solve->add_option("--emit-coloring", so.emit, "Write the reconstructed coloring here");
    solve->add_option("--root", so.root, "Root vertex (default 0)");
    solve->add_flag("--json", so.json, "JSON output");
    solve->add_flag("--timings", so.timings, "Include wall times in JSON output");

    ExactOptions eo;
    auto* exact = app.add_subcommand("exact", "Exact backtracking solver for small graphs");
    exact->add_option("--kind", eo.kind, "proper | ur | semistrong | strong")->required();
    exact->add_option("-i,--input", eo.input, "Graph file")->required();
    exact->add_option("-p,--palette", eo.palette, "Decide with this many colors instead of minimizing");
    exact->add_flag("--enumerate", eo.enumerate, "Count all colorings with --palette colors");
    exact->add_option("--node-budget", eo.node_budget, "Give up after this many search nodes (0 = never)");
    exact->add_option("--cap", eo.cap, "Stop enumerating after this many colorings");
    exact->add_flag("--no-symmetry", eo.no_symmetry, "Disable symmetry reduction");
    exact->add_option("--emit-coloring", eo.emit, "Write the witness coloring here");
    exact->add_flag("--json", eo.json, "JSON output");

    std::string vkind, vinput, vcoloring;
    bool vjson = false;
    auto* verify = app.add_subcommand("verify", "Check a coloring against a matching predicate");
    verify->add_option("--kind", vkind, "proper | ur | semistrong | strong")->required();
    verify->add_option("-i,--input", vinput, "Graph file")->required();
    verify->add_option("-c,--coloring", vcoloring, "Coloring file")->required();
    verify->add_flag("--json", vjson, "JSON output");

    ReduceOptions ro;
    auto* reduce_cmd = app.add_subcommand("reduce", "Replace every edge of a k-regular graph by a gadget");
    reduce_cmd->add_option("-k", ro.k, "Regularity / palette size")->required();
    reduce_cmd->add_option("-i,--input", ro.input, "k-regular graph file")->required();
    reduce_cmd->add_option("-o,--output", ro.output, "Write the reduced graph here");
    reduce_cmd->add_option("--map", ro.map, "Write the JSON edge-to-gadget map here");
    reduce_cmd->add_option("--lift", ro.lift, "Proper coloring of the input to lift");
    reduce_cmd->add_option("--extract", ro.extract, "Semistrong coloring of the reduced graph to read back");
    reduce_cmd->add_option("--emit-coloring", ro.emit, "Write the lifted or extracted coloring here");
    reduce_cmd->add_flag("--json", ro.json, "JSON output");

    GadgetOptions go;
    auto* gadget = app.add_subcommand("gadget", "Build a gadget and optionally check its forced colors");
    gadget->add_option("--kind", go.kind, "B | Q | R")->required();
    gadget->add_option("-k", go.k, "Palette size")->required();
    gadget->add_option("-o,--output", go.output, "Write the gadget graph here");
    gadget->add_option("--map", go.map, "Write edge and vertex names as JSON here");
    gadget->add_flag("--augmented", go.augmented, "Attach k-1 pendant edges at both boundary vertices");
    gadget->add_flag("--verify", go.verify, "Enumerate colorings and check the forced-color claims");
    gadget->add_option("--node-budget", go.node_budget, "Search node limit per enumeration (0 = none)");
    gadget->add_flag("--json", go.json, "JSON output");

    GenOptions gn;
    auto* gen = app.add_subcommand("gen", "Generate a graph file");
    gen->add_option("--family", gn.family,
                    "path | cycle | star | complete | complete-bipartite | random-tree | circulant | petersen | "
                    "hypercube | random-graph")
        ->required();
    gen->add_option("-n", gn.n, "Vertex count");
    gen->add_option("-a", gn.a, "First side (complete-bipartite)");
    gen->add_option("-b", gn.b, "Second side (complete-bipartite)");
    gen->add_option("--dim", gn.dim, "Hypercube dimension");
    gen->add_option("--delta", gn.delta, "Maximum degree (random-tree)");
    gen->add_option("--seed", gn.seed, "Random seed (default 1)");
    gen->add_option("--p", gn.p, "Edge probability (random-graph)");
    gen->add_option("--offsets", gn.offsets, "Circulant offsets")->delimiter(',');
    gen->add_option("-o,--output", gn.output, "Output file (default stdout)");

    BenchOptions bo;
    auto* bench = app.add_subcommand("bench", "Time the tree program on generated trees (CSV)");
    bench->add_option("--family", bo.family, "random-tree | path | star");
    bench->add_option("-n,--n", bo.sizes, "Tree sizes")->delimiter(',');
    bench->add_option("--delta", bo.delta, "Maximum degree for random trees (default 8)");
    bench->add_option("-K,--budget", bo.budget, "Color budget (default max degree + 1)");
    bench->add_option("--seed", bo.seed, "Random seed (default 1)");
    bench->add_option("--repeat", bo.repeat, "Report the best of this many runs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kBadInput;
    }

    try {
        if (*solve) return run_solve(so);
        if (*exact) return run_exact(eo);
        if (*verify) return run_verify(vkind, vinput, vcoloring, vjson);
        if (*reduce_cmd) return run_reduce(ro);
        if (*gadget) return run_gadget(go);
        if (*gen) return run_gen(gn);
        if (*bench) return run_bench(bo);
    } catch (const NotATreeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    } catch (const TypeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    } catch (const BoundaryDisagreement& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const ColoringError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
    return kBadInput;
}
