#pragma once

#include <string>
#include <vector>

#include "clut/bitset.hpp"
#include "clut/graph.hpp"
#include "clut/rational.hpp"
#include "clut/setcover.hpp"

namespace clut {

// Role of a vertex inside a reduction gadget.
enum class VertexRole { element, set_vertex };

// Bipartite membership gadget built from a set-cover instance.  Vertices are
// numbered copies-first: element copies occupy [0, n*multiplicity) with copy
// (i, k) at i*multiplicity + k, and the m set vertices follow.  With
// multiplicity 1 this is the plain membership graph.
struct ReductionOutput {
    Graph graph;
    Bitset distinguished_mis;        // the set-vertex side
    std::vector<VertexRole> roles;   // per vertex
    std::vector<int> role_index;     // element index / set index per vertex
    std::vector<int> copy_index;     // copy number for elements, -1 for sets
    int universe = 0;                // n of the source instance
    int nsets = 0;                   // m of the source instance
    int multiplicity = 1;
};

// Membership graph: one vertex per element, one per set, edges for membership.
// The set side is a maximal independent set whose minimum recognizing subsets
// are exactly the minimum covers.  InputError if the sets do not cover the
// universe (the set side would not be maximal).
ReductionOutput build_problem1_graph(const SetCoverInstance& inst);

// Same gadget with every element blown up into `multiplicity` twin copies.
// multiplicity 0 selects the default (n+m)^2.  Copy counts this large push the
// complexity of every other maximal independent set below 1/m, so the whole
// graph's complexity collapses to l_min/m.
ReductionOutput build_problem2_graph(const SetCoverInstance& inst, int multiplicity = 0);

enum class ReductionKind { problem1, problem2 };

// Exhaustive cross-check of a gadget against its source instance.  Covers are
// enumerated by brute force over all 2^m subfamilies; recognizing subsets of
// the distinguished side are tested by the containment definition against the
// full list of maximal independent sets, independently of the domination
// shortcut used by the solver.
struct ReductionReport {
    ReductionKind kind = ReductionKind::problem1;
    int universe = 0;
    int nsets = 0;
    int multiplicity = 1;
    int l_min = 0;                        // exact set-cover optimum
    int distinguished_min_recognizing = 0;
    std::vector<char> cover_exists;       // index l in 0..m: some l-subfamily covers
    std::vector<char> recognizing_exists; // index l in 0..m: some l-subset recognizes
    Rational distinguished_complexity;    // |S_U| / m for the distinguished U
    Rational expected;                    // l_min / m
    Rational whole_complexity;            // exact c of the gadget
    Rational worst_other;                 // max complexity among the other edges
    bool has_other = false;
    bool ok = false;
    std::vector<std::string> failures;    // human-readable assertion failures
};

// Builds the requested gadget and checks the reduction's claims exactly.
// problem1: a size-l recognizing subset of the distinguished side exists iff a
// size-l cover exists (every l), and the minimum recognizing size is l_min.
// problem2: additionally c(gadget) == l_min/m and every non-distinguished
// maximal independent set has complexity < 1/m.
// InputError when the instance is too large for exhaustive verification.
ReductionReport verify_reduction(const SetCoverInstance& inst, ReductionKind which,
                                 int multiplicity = 0);

} // namespace clut
