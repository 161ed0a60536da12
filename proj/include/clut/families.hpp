#pragma once

#include <string>

#include "clut/bitset.hpp"
#include "clut/clutter.hpp"
#include "clut/graph.hpp"
#include "clut/rational.hpp"

namespace clut {

// Clique-with-apex extremal graph: an n-clique, an apex adjacent to the whole
// clique, and n-1 private pendant vertices on each clique vertex.  n^2+1
// vertices, max degree 2n-1, complexity 1/(n^2-2n+2).  The generator asserts
// the structural postconditions always and re-verifies the complexity value
// exactly for n <= 4; an assertion failure throws Error.
Graph main_bound_extremal(int n);

// Connected bipartite graph with independent-set complexity exactly m/n for
// 1 <= m <= n: hub a = vertex 0, complete bipartite S x T with
// |S| = |T| = n-m+1, m-1 pendant pairs x_i - y_i, and a joined to all of S
// and all of X.  The unique maximal independent set containing a has
// complexity 1/(n+1); all others have m/n.  For n <= 6 the generator
// re-verifies the complexity and the per-edge split exactly.
Graph all_rationals_graph(int m, int n);

// The divisibility boundary example: a k-clique, each clique vertex joined to
// its own k-1 private independent vertices (so U_0, the all-private side, has
// k^2-k vertices), and the clutter of all maximal independent sets with U_0
// removed.  Ground size n = k^2 is divisible by k, and c = 1/(k^2-2k+2) sits
// strictly below the surd lower bound that the divisibility would otherwise
// forbid; both facts are asserted exactly.
struct AddendumFamily {
    Graph graph;
    Clutter clutter; // maximal independent sets of graph, with omitted removed
    Bitset omitted;  // U_0, the all-private side
    int k = 0;
};
AddendumFamily addendum_clutter(int k);

// Deterministic search for a connected graph whose matching-clutter
// complexity equals target.  Candidate order: per vertex count ascending,
// path, cycle, complete, balanced complete bipartite, subdivided stars,
// brooms; then seeded random graphs (edge probability 1/2).  Absence within
// the budget is a valid result, not an error.
struct WitnessSearchResult {
    bool found = false;
    Graph graph;         // valid only when found
    std::string family;  // generator that produced the witness
    long long tried = 0; // candidates whose complexity was computed
};
WitnessSearchResult rational_witness_search(const Rational& target, int max_vertices,
                                            unsigned long long seed = 1,
                                            int random_attempts = 64);

} // namespace clut
