#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "clut/bounds.hpp"
#include "clut/census.hpp"
#include "clut/clutter.hpp"
#include "clut/errors.hpp"
#include "clut/families.hpp"
#include "clut/io.hpp"
#include "clut/reductions.hpp"
#include "clut/scan.hpp"
#include "clut/trees.hpp"

using namespace clut;

namespace {

// Exit codes: 0 = success / property holds, 1 = a checked property fails or a
// counterexample was found, 2 = bad input or exceeded resource budget.
constexpr int kExitHolds = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

struct GlobalOpts {
    std::string format;        // empty: per-subcommand default
    int vertex_cap = 0;        // 0: keep default
    long long enum_cap = 0;    // 0: keep default
    int jobs = 1;
    unsigned long long seed = 1;
};

OutputFormat pick_format(const GlobalOpts& g, OutputFormat dflt) {
    return g.format.empty() ? dflt : output_format_from_name(g.format);
}

bool format_given(const GlobalOpts& g) { return !g.format.empty(); }

EnumLimits limits_of(const GlobalOpts& g) {
    return g.enum_cap > 0 ? EnumLimits(static_cast<size_t>(g.enum_cap)) : EnumLimits();
}

// One graph: from --graph6 if given, otherwise the first non-blank line of
// standard input.
Graph input_graph(const std::string& g6) {
    if (!g6.empty()) return from_graph6(g6);
    std::string line;
    while (std::getline(std::cin, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        if (line.empty()) continue;
        return from_graph6(line);
    }
    throw InputError("no graph on standard input (expected one graph6 line)");
}

Clutter input_clutter(const std::string& path) {
    if (path.empty() || path == "-") return read_clutter_text(std::cin);
    std::ifstream f(path);
    if (!f) throw InputError("cannot open '" + path + "'");
    return read_clutter_text(f);
}

SetCoverInstance input_setcover(const std::string& path) {
    if (path.empty() || path == "-") return read_setcover_text(std::cin);
    std::ifstream f(path);
    if (!f) throw InputError("cannot open '" + path + "'");
    return read_setcover_text(f);
}

void emit(const Json& doc, OutputFormat fmt) { std::cout << render(doc, fmt); }

std::string clutter_text(const Clutter& l) {
    std::string out = std::to_string(l.ground) + "\n";
    for (const Bitset& e : l.edges) {
        bool first = true;
        for (int v = e.first(); v >= 0; v = e.next(v)) {
            if (!first) out += ' ';
            first = false;
            out += std::to_string(v);
        }
        out += '\n';
    }
    return out;
}

// ---- complexity ----

struct ComplexityArgs {
    bool independent = false;
    bool matching = false;
    std::string clutter_file;
    bool clutter_from_file = false;
    std::string g6;
};

int run_complexity(const GlobalOpts& G, const ComplexityArgs& A) {
    const OutputFormat fmt = pick_format(G, OutputFormat::human);
    Json doc;
    Rational c;
    if (A.clutter_from_file) {
        const Clutter l = input_clutter(A.clutter_file);
        const ComplexityReport rep = clutter_complexity(l, nullptr, RecogMethod::exact, G.jobs);
        c = rep.c;
        doc = to_json(rep);
    } else if (A.matching) {
        const Graph g = input_graph(A.g6);
        const MatchingReport rep = matching_complexity(g, limits_of(G), G.jobs);
        c = rep.report.c;
        doc = to_json(rep);
    } else {
        const Graph g = input_graph(A.g6);
        const ComplexityReport rep = graph_complexity(g, limits_of(G), G.jobs);
        c = rep.c;
        doc = to_json(rep);
    }
    if (fmt == OutputFormat::human) {
        std::cout << c.str() << "\n";
    } else {
        emit(doc, fmt);
    }
    return kExitHolds;
}

// ---- label-tree ----

int run_label_tree(const GlobalOpts& G, const std::string& g6) {
    const Graph t = input_graph(g6);
    const TreeLabeling lab = label_tree(t);
    emit(to_json(lab), pick_format(G, OutputFormat::human));
    return kExitHolds;
}

// ---- construct-tree-mis ----

const char* outcome_name(ConstructionTrace::Outcome o) {
    switch (o) {
    case ConstructionTrace::Outcome::promoted_anchor: return "promoted-anchor";
    case ConstructionTrace::Outcome::picked_shielded: return "picked-shielded";
    case ConstructionTrace::Outcome::picked_single: return "picked-single";
    }
    return "?";
}

int run_construct(const GlobalOpts& G, const std::string& g6, int leaf) {
    const Graph t = input_graph(g6);
    const FullComplexityMis mis = construct_full_complexity_mis(t, leaf);
    Json j;
    j["leaf"] = leaf;
    j["independent_set"] = mis.u.to_vector();
    j["forcing_witnesses"] = mis.spec.to_vector();
    j["complexity"] = to_json(Rational(1, 1));
    Json events = Json::array();
    for (const ConstructionTrace::Event& e : mis.trace.events) {
        Json ev;
        ev["anchor"] = e.anchor;
        ev["group"] = e.group;
        ev["outcome"] = outcome_name(e.outcome);
        ev["added_to_set"] = e.added_u;
        ev["added_witnesses"] = e.added_spec;
        events.push_back(std::move(ev));
    }
    j["trace"] = std::move(events);
    emit(j, pick_format(G, OutputFormat::human));
    return kExitHolds;
}

// ---- reduce ----

struct ReduceArgs {
    std::string kind;
    std::string file;
    int multiplicity = 0;
    bool verify = false;
};

int run_reduce(const GlobalOpts& G, const ReduceArgs& A) {
    const SetCoverInstance inst = input_setcover(A.file);
    const ReductionKind kind =
        A.kind == "problem1" ? ReductionKind::problem1 : ReductionKind::problem2;
    if (A.verify) {
        const ReductionReport rep = verify_reduction(inst, kind, A.multiplicity);
        emit(to_json(rep), pick_format(G, OutputFormat::human));
        return rep.ok ? kExitHolds : kExitViolation;
    }
    const ReductionOutput out = kind == ReductionKind::problem1
                                    ? build_problem1_graph(inst)
                                    : build_problem2_graph(inst, A.multiplicity);
    if (!format_given(G)) {
        std::cout << to_graph6(out.graph) << "\n";
        return kExitHolds;
    }
    Json j;
    j["kind"] = A.kind;
    j["universe"] = out.universe;
    j["sets"] = out.nsets;
    j["multiplicity"] = out.multiplicity;
    j["n"] = out.graph.n();
    j["m"] = out.graph.m();
    j["graph6"] = to_graph6(out.graph);
    j["distinguished"] = out.distinguished_mis.to_vector();
    Json roles = Json::array();
    for (size_t v = 0; v < out.roles.size(); ++v) {
        Json r;
        r["vertex"] = v;
        r["role"] = out.roles[v] == VertexRole::element ? "element" : "set";
        r["index"] = out.role_index[v];
        if (out.roles[v] == VertexRole::element) r["copy"] = out.copy_index[v];
        roles.push_back(std::move(r));
    }
    j["roles"] = std::move(roles);
    emit(j, pick_format(G, OutputFormat::json));
    return kExitHolds;
}

// ---- family ----

struct FamilyArgs {
    std::string which;
    int n = 0;
    int m = 0;
    int k = 0;
    std::string target;
    int max_vertices = 12;
    int attempts = 64;
};

int run_family(const GlobalOpts& G, const FamilyArgs& A) {
    if (A.which == "main-bound") {
        if (A.n < 1) throw InputError("main-bound needs -n >= 1");
        const Graph g = main_bound_extremal(A.n);
        if (!format_given(G)) {
            std::cout << to_graph6(g) << "\n";
            return kExitHolds;
        }
        Json j;
        j["family"] = "main-bound";
        j["n"] = A.n;
        j["vertices"] = g.n();
        j["complexity"] = to_json(Rational(1, 1ll * A.n * A.n - 2 * A.n + 2));
        j["graph6"] = to_graph6(g);
        emit(j, pick_format(G, OutputFormat::json));
        return kExitHolds;
    }
    if (A.which == "all-rationals") {
        if (A.m < 1 || A.n < A.m) throw InputError("all-rationals needs 1 <= -m <= -n");
        const Graph g = all_rationals_graph(A.m, A.n);
        if (!format_given(G)) {
            std::cout << to_graph6(g) << "\n";
            return kExitHolds;
        }
        Json j;
        j["family"] = "all-rationals";
        j["m"] = A.m;
        j["n"] = A.n;
        j["vertices"] = g.n();
        j["complexity"] = to_json(Rational(A.m, A.n));
        j["graph6"] = to_graph6(g);
        emit(j, pick_format(G, OutputFormat::json));
        return kExitHolds;
    }
    if (A.which == "addendum") {
        if (A.k < 2) throw InputError("addendum needs -k >= 2");
        const AddendumFamily fam = addendum_clutter(A.k);
        if (!format_given(G)) {
            std::cout << clutter_text(fam.clutter);
            return kExitHolds;
        }
        Json j;
        j["family"] = "addendum";
        j["k"] = A.k;
        j["ground"] = fam.clutter.ground;
        Json edges = Json::array();
        for (const Bitset& e : fam.clutter.edges) edges.push_back(e.to_vector());
        j["edges"] = std::move(edges);
        j["omitted_independent_set"] = fam.omitted.to_vector();
        j["graph6"] = to_graph6(fam.graph);
        j["complexity"] = to_json(Rational(1, 1ll * A.k * A.k - 2 * A.k + 2));
        emit(j, pick_format(G, OutputFormat::json));
        return kExitHolds;
    }
    // witness: search small graphs for an exact matching-complexity value.
    if (A.target.empty()) throw InputError("witness needs --target p/q");
    const Rational target = Rational::parse(A.target);
    const WitnessSearchResult res =
        rational_witness_search(target, A.max_vertices, G.seed, A.attempts);
    if (!format_given(G)) {
        if (res.found) {
            std::cout << to_graph6(res.graph) << "\n";
        } else {
            std::cerr << "no witness with at most " << A.max_vertices << " vertices after "
                      << res.tried << " candidates\n";
        }
        return kExitHolds;
    }
    Json j;
    j["family"] = "witness";
    j["target"] = target.str();
    j["found"] = res.found;
    j["tried"] = res.tried;
    if (res.found) {
        j["graph6"] = to_graph6(res.graph);
        j["shape"] = res.family;
        j["vertices"] = res.graph.n();
    }
    emit(j, pick_format(G, OutputFormat::json));
    return kExitHolds;
}

// ---- check ----

struct CheckArgs {
    std::string what; // bound | lemma
    std::string kind;
    std::string g6;
    std::string clutter_file;
    bool clutter_from_file = false;
};

int run_check(const GlobalOpts& G, const CheckArgs& A) {
    const OutputFormat fmt = pick_format(G, OutputFormat::human);
    if (A.what == "bound") {
        const auto kind = bound_kind_from_name(A.kind);
        if (!kind) throw InputError("unknown bound kind '" + A.kind + "'");
        BoundReport rep;
        if (A.clutter_from_file || *kind == BoundKind::addendum) {
            rep = check_bound(input_clutter(A.clutter_file), *kind);
        } else {
            rep = check_bound(input_graph(A.g6), *kind);
        }
        emit(to_json(rep), fmt);
        const bool violated = rep.applicable && rep.computed && !rep.holds;
        return violated ? kExitViolation : kExitHolds;
    }
    const auto kind = lemma_kind_from_name(A.kind);
    if (!kind) throw InputError("unknown lemma kind '" + A.kind + "'");
    const LemmaReport rep = check_lemma(input_graph(A.g6), *kind);
    emit(to_json(rep), fmt);
    const bool violated = rep.premise_holds && !rep.holds();
    return violated ? kExitViolation : kExitHolds;
}

// ---- scan ----

int run_scan(const GlobalOpts& G, int builtin_max_n) {
    const ScanReport rep =
        builtin_max_n > 0 ? conjecture_scan_builtin(builtin_max_n, G.jobs)
                          : conjecture_scan(std::cin, G.jobs);
    emit(to_json(rep), pick_format(G, OutputFormat::human));
    return rep.consistent() ? kExitHolds : kExitViolation;
}

// ---- report ----

int run_report(const GlobalOpts& G, const std::string& g6) {
    const FullReport rep = full_report(input_graph(g6));
    emit(to_json(rep), pick_format(G, OutputFormat::human));
    return kExitHolds;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact recognizing-set complexity of maximal independent sets and matchings"};
    app.require_subcommand(1);

    GlobalOpts G;
    app.add_option("--format", G.format, "output format: json, tsv, or human")
        ->check(CLI::IsMember({"json", "tsv", "human"}));
    app.add_option("--vertex-cap", G.vertex_cap, "largest accepted vertex count");
    app.add_option("--enum-cap", G.enum_cap, "enumeration budget (number of sets)");
    app.add_option("--jobs", G.jobs, "worker threads for independent subproblems")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", G.seed, "seed for randomized searches");

    ComplexityArgs CA;
    CLI::App* complexity = app.add_subcommand(
        "complexity", "exact complexity of one graph or clutter (human output: just the value)");
    complexity->fallthrough();
    complexity->add_flag("--independent", CA.independent,
                         "maximal independent sets of a graph (default)");
    complexity->add_flag("--matching", CA.matching, "maximal matchings of a graph");
    complexity->add_option("--clutter-file", CA.clutter_file, "read a clutter ('-' = stdin)")
        ->expected(1);
    complexity->add_option("--graph6", CA.g6, "graph as a graph6 string (default: stdin)");

    std::string label_g6;
    CLI::App* label = app.add_subcommand("label-tree", "alpha/beta/gamma/delta labels of a tree");
    label->fallthrough();
    label->add_option("--graph6", label_g6, "tree as a graph6 string (default: stdin)");

    std::string construct_g6;
    int construct_leaf = 0;
    CLI::App* construct = app.add_subcommand(
        "construct-tree-mis",
        "maximal independent set with complexity one through a chosen leaf of a tree");
    construct->fallthrough();
    construct->add_option("--graph6", construct_g6, "tree as a graph6 string (default: stdin)");
    construct->add_option("--leaf", construct_leaf, "leaf vertex the set must contain")
        ->required();

    ReduceArgs RA;
    CLI::App* reduce = app.add_subcommand(
        "reduce", "set-cover membership gadget (default output: one graph6 line)");
    reduce->fallthrough();
    reduce->add_option("kind", RA.kind, "problem1 (plain) or problem2 (twin copies)")
        ->required()
        ->check(CLI::IsMember({"problem1", "problem2"}));
    reduce->add_option("--file", RA.file, "set-cover instance file ('-' = stdin)");
    reduce->add_option("--multiplicity", RA.multiplicity,
                       "copies per element for problem2 (0 = (n+m)^2)");
    reduce->add_flag("--verify", RA.verify, "exhaustively check the gadget instead of printing it");

    FamilyArgs FA;
    CLI::App* family = app.add_subcommand(
        "family", "constructed graph/clutter families (default output: graph6 / clutter text)");
    family->fallthrough();
    family->add_option("which", FA.which, "main-bound, all-rationals, addendum, or witness")
        ->required()
        ->check(CLI::IsMember({"main-bound", "all-rationals", "addendum", "witness"}));
    family->add_option("-n", FA.n, "clique size (main-bound) / denominator (all-rationals)");
    family->add_option("-m", FA.m, "numerator (all-rationals)");
    family->add_option("-k", FA.k, "edge count (addendum)");
    family->add_option("--target", FA.target, "complexity value p/q to search for (witness)");
    family->add_option("--max-vertices", FA.max_vertices, "search ceiling (witness)");
    family->add_option("--attempts", FA.attempts, "random candidates per vertex count (witness)");

    CheckArgs KA;
    CLI::App* check = app.add_subcommand("check", "verdict for one bound or lemma on one input");
    check->fallthrough();
    check->add_option("what", KA.what, "bound or lemma")
        ->required()
        ->check(CLI::IsMember({"bound", "lemma"}));
    check->add_option("--kind", KA.kind, "which bound/lemma to check")->required();
    check->add_option("--graph6", KA.g6, "graph as a graph6 string (default: stdin)");
    check->add_option("--clutter-file", KA.clutter_file,
                      "read a clutter instead of a graph ('-' = stdin)");

    int scan_builtin = 0;
    CLI::App* scan = app.add_subcommand(
        "scan", "matching-complexity conjecture scan over a graph6 stream on stdin");
    scan->fallthrough();
    scan->add_option("--builtin", scan_builtin,
                     "scan every graph on 1..N vertices instead of reading stdin (N <= 7)");

    std::string report_g6;
    CLI::App* report = app.add_subcommand("report",
                                          "stats, both complexities, all bounds and lemmas");
    report->fallthrough();
    report->add_option("--graph6", report_g6, "graph as a graph6 string (default: stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (G.vertex_cap > 0) Graph::set_vertex_cap(G.vertex_cap);
        CA.clutter_from_file = complexity->count("--clutter-file") > 0;
        KA.clutter_from_file = check->count("--clutter-file") > 0;
        if (complexity->parsed()) return run_complexity(G, CA);
        if (label->parsed()) return run_label_tree(G, label_g6);
        if (construct->parsed()) return run_construct(G, construct_g6, construct_leaf);
        if (reduce->parsed()) return run_reduce(G, RA);
        if (family->parsed()) return run_family(G, FA);
        if (check->parsed()) return run_check(G, KA);
        if (scan->parsed()) return run_scan(G, scan_builtin);
        if (report->parsed()) return run_report(G, report_g6);
        std::cerr << "error: no subcommand\n";
        return kExitInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
