#pragma once

#include <cstdint>
#include <vector>

#include "clut/graph.hpp"

namespace clut {

// Compact labeled graph on at most 11 vertices: one bit per vertex pair, pair
// (u, v) with u < v at triangular index pair_bit(n, u, v).
struct SmallGraph {
    int n = 0;
    std::uint64_t bits = 0;
};

int pair_bit(int n, int u, int v);
Graph small_to_graph(const SmallGraph& sg);
SmallGraph graph_to_small(const Graph& g);

// All graphs on exactly n vertices up to isomorphism (1 <= n <= 9), grown by
// one-vertex extension with invariant-hash bucketing and exact isomorphism
// confirmation inside each bucket.
std::vector<SmallGraph> all_graphs(int n);

// The connected members of all_graphs(n).
std::vector<SmallGraph> connected_graphs(int n);

// Connected regular graphs on n vertices up to isomorphism (1 <= n <= 10).
// n = 10 is built from the 9-vertex census: deleting a vertex from an
// r-regular graph leaves exactly r vertices of degree r-1, so re-attaching a
// vertex to precisely the degree-deficient set recovers every class.
std::vector<SmallGraph> connected_regular_graphs(int n);

// Free trees on n vertices up to isomorphism (1 <= n <= 16), grown by leaf
// attachment and deduplicated by the canonical centre-rooted encoding.
std::vector<Graph> all_trees(int n);

} // namespace clut
