#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "clut/bitset.hpp"
#include "clut/graph.hpp"
#include "clut/rational.hpp"

namespace clut {

// Budget caps for enumeration entry points.  The default edge cap is
// 1,000,000 (override with CLUT_ENUM_CAP); exceeding a cap raises BudgetError
// naming the cap and the partial count — results are never silently truncated.
struct EnumLimits {
    size_t max_edges;
    EnumLimits();
    explicit EnumLimits(size_t cap) : max_edges(cap) {}
};

// A clutter: an antichain of subsets ("edges") of a ground set 0..ground-1.
// Edges are kept sorted in canonical set-lex order.
struct Clutter {
    int ground = 0;
    std::vector<Bitset> edges;
};

// Validates (every edge within the ground set, no duplicates, antichain) and
// canonically sorts.  Pass validate_antichain = false only for edge sets that
// are antichains by construction.
Clutter make_clutter(int ground, std::vector<Bitset> edges, bool validate_antichain = true);

// All maximal independent sets of g, as a clutter over the vertices, in
// canonical order.  Recursive pivot-based expansion over bitset rows.
Clutter maximal_independent_sets(const Graph& g, const EnumLimits& limits = EnumLimits());

// Greedy completion of an independent seed to a maximal independent set:
// repeatedly adds the smallest-index eligible vertex.  InputError if the seed
// is not independent.
Bitset extend_to_maximal_independent(const Graph& g, const Bitset& seed);

// All maximal matchings of g, as a clutter over edge indices of g.edges();
// equals maximal_independent_sets(line_graph(g)).
struct MatchingClutter {
    Clutter clutter;
    std::vector<std::pair<int, int>> edge_map; // clutter ground element -> edge of g
    Graph line;                                // the line graph (domination route carrier)
};
MatchingClutter maximal_matchings(const Graph& g, const EnumLimits& limits = EnumLimits());

// Derived graph of a clutter: vertices = ground set, u ~ v iff no edge
// contains both.  For the clutter of maximal independent sets of g this
// reconstructs g itself.
Graph derived_graph(const Clutter& l);

// ---- recognizing sets ----------------------------------------------------

// True iff `subset` (which must be a subset of edge edge_index) is contained
// in no other edge of l.
bool is_recognizing(const Clutter& l, int edge_index, const Bitset& subset);

// Domination form for maximal independent sets: subset ⊆ U is recognizing for
// U in the clutter of all maximal independent sets of g iff every vertex
// outside U has a neighbour in the subset.  Must agree with is_recognizing on
// that clutter.
bool is_recognizing_mis(const Graph& g, const Bitset& U, const Bitset& subset);

enum class RecogMethod { exact, greedy };

struct RecognizingResult {
    int edge_index = -1;
    Bitset min_set;        // canonical: set-lex smallest among minimum-size sets (exact method)
    Rational complexity;   // |min_set| / |edge|
    bool exact = true;     // false for the greedy upper bound
};

// Minimum recognizing subset of the given edge.  exact: iterative deepening
// by subset size for edges up to 20 elements, branch-and-bound on the
// equivalent set-cover instance above that; greedy: upper bound only.
// When mis_graph is non-null the clutter must be (a sub-clutter semantics is
// NOT allowed: it must be exactly) the maximal-independent-set clutter of
// *mis_graph, and the cheaper domination feasibility test is used.
RecognizingResult min_recognizing_set(const Clutter& l, int edge_index,
                                      RecogMethod method = RecogMethod::exact,
                                      const Graph* mis_graph = nullptr);

// ---- complexity ----------------------------------------------------------

struct EdgeComplexity {
    int edge_index = -1;
    Bitset min_set;
    Rational c;
};

struct ComplexityReport {
    int ground = 0;
    std::vector<EdgeComplexity> per_edge;
    Rational c;             // max over edges
    int argmax_edge = -1;   // ties -> lowest edge index
    bool exact = true;      // false when computed with the greedy method
    double elapsed_sec = 0; // in-memory only; never serialized
};

// c(L): max over edges of |S_e|/|e|.  Errors on an empty clutter.
ComplexityReport clutter_complexity(const Clutter& l, const Graph* mis_graph = nullptr,
                                    RecogMethod method = RecogMethod::exact, int jobs = 1);

// c(G) = c(U_G) over the maximal independent sets.
ComplexityReport graph_complexity(const Graph& g, const EnumLimits& limits = EnumLimits(),
                                  int jobs = 1);

// Complexity of the clutter of maximal matchings.  Errors on edgeless input.
struct MatchingReport {
    ComplexityReport report;
    std::vector<std::pair<int, int>> edge_map;
};
MatchingReport matching_complexity(const Graph& g, const EnumLimits& limits = EnumLimits(),
                                   int jobs = 1);

} // namespace clut
