#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clut/bitset.hpp"

namespace clut {

// Simple undirected graph on vertices 0..n-1, immutable once built.
// Adjacency is stored as packed bitset rows (n * nwords contiguous words) so
// the batch kernels can scan rows directly; the edge list is kept sorted
// lexicographically with u < v and doubles as the line-graph vertex order.
//
// Graphs larger than the global vertex cap (default 128, override with
// CLUT_VERTEX_CAP or set_vertex_cap) are rejected up front.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);
    static Graph edgeless(int n);

    // Named generators.
    static Graph complete(int n);
    static Graph complete_bipartite(int a, int b);
    static Graph cycle(int n);  // n >= 3
    static Graph path(int n);   // n >= 0
    static Graph star(int leaves); // K_{1,leaves}: vertex 0 is the center

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    int nwords() const { return nwords_; }

    bool adjacent(int u, int v) const {
        return (rows_[static_cast<size_t>(u) * nwords_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    int degree(int v) const { return degree_[v]; }
    const uint64_t* row(int v) const { return rows_.data() + static_cast<size_t>(v) * nwords_; }
    Bitset neighbors(int v) const;
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && edges_ == o.edges_;
    }

    static int vertex_cap();
    static void set_vertex_cap(int cap);

private:
    int n_ = 0;
    int nwords_ = 0;
    std::vector<uint64_t> rows_;
    std::vector<int> degree_;
    std::vector<std::pair<int, int>> edges_;

    void add_edge_unchecked(int u, int v);
    friend Graph make_graph_prevalidated(int n, std::vector<std::pair<int, int>>&& sorted_edges);
};

struct GraphStats {
    int n = 0;
    int m = 0;
    int max_degree = 0;
    int min_degree = 0;
    bool connected = false;
    bool bipartite = false;
    bool regular = false;
    std::optional<int> regular_degree;
    bool tree = false;
    bool complete = false;
    bool balanced_complete_bipartite = false; // K_{s,s}
    std::optional<int> bipartite_side;        // s, when balanced_complete_bipartite
    bool cycle = false;
    std::optional<int> diameter; // present iff connected and n >= 1
};

GraphStats graph_stats(const Graph& g);

bool is_connected(const Graph& g);

// Line graph L(g): one vertex per edge of g (in g.edges() order), adjacent
// when the two edges share an endpoint.  g.edges() is the index->edge map.
Graph line_graph(const Graph& g);

// graph6, short form only (n <= 62).  Parse errors name the byte offset.
Graph from_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

} // namespace clut
