#include "clut/graph.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>

#include "clut/errors.hpp"

namespace clut {

namespace {
std::atomic<int> g_vertex_cap{0}; // 0 = uninitialized

int initial_cap() {
    if (const char* v = std::getenv("CLUT_VERTEX_CAP")) {
        char* end = nullptr;
        long parsed = std::strtol(v, &end, 10);
        if (end && *end == '\0' && parsed > 0 && parsed <= 1 << 20)
            return static_cast<int>(parsed);
    }
    return 128;
}
} // namespace

int Graph::vertex_cap() {
    int cap = g_vertex_cap.load(std::memory_order_relaxed);
    if (cap == 0) {
        cap = initial_cap();
        g_vertex_cap.store(cap, std::memory_order_relaxed);
    }
    return cap;
}

void Graph::set_vertex_cap(int cap) {
    if (cap <= 0) throw InputError("vertex cap must be positive");
    g_vertex_cap.store(cap, std::memory_order_relaxed);
}

void Graph::add_edge_unchecked(int u, int v) {
    rows_[static_cast<size_t>(u) * nwords_ + (v >> 6)] |= uint64_t(1) << (v & 63);
    rows_[static_cast<size_t>(v) * nwords_ + (u >> 6)] |= uint64_t(1) << (u & 63);
    ++degree_[u];
    ++degree_[v];
}

Graph make_graph_prevalidated(int n, std::vector<std::pair<int, int>>&& sorted_edges) {
    Graph g;
    g.n_ = n;
    g.nwords_ = n == 0 ? 1 : (n + 63) / 64;
    g.rows_.assign(static_cast<size_t>(n) * g.nwords_, 0);
    g.degree_.assign(n, 0);
    g.edges_ = std::move(sorted_edges);
    for (auto [u, v] : g.edges_) g.add_edge_unchecked(u, v);
    return g;
}

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw InputError("vertex count must be non-negative");
    if (n > vertex_cap())
        throw InputError("graph has " + std::to_string(n) + " vertices, exceeding the vertex cap of " +
                         std::to_string(vertex_cap()) + " (raise with CLUT_VERTEX_CAP or --vertex-cap)");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") has an endpoint outside [0," + std::to_string(n) + ")");
        if (u == v) throw InputError("loop at vertex " + std::to_string(u) + " not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw InputError("duplicate edge (" + std::to_string(dup->first) + "," +
                         std::to_string(dup->second) + ")");
    return make_graph_prevalidated(n, std::move(edges));
}

Graph Graph::edgeless(int n) { return from_edges(n, {}); }

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return from_edges(n, std::move(e));
}

Graph Graph::complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw InputError("complete bipartite sides must be non-negative");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return from_edges(a + b, std::move(e));
}

Graph Graph::cycle(int n) {
    if (n < 3) throw InputError("cycle requires at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return from_edges(n, std::move(e));
}

Graph Graph::path(int n) {
    if (n < 0) throw InputError("path length must be non-negative");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return from_edges(n, std::move(e));
}

Graph Graph::star(int leaves) {
    if (leaves < 0) throw InputError("star requires a non-negative number of leaves");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return from_edges(leaves + 1, std::move(e));
}

Bitset Graph::neighbors(int v) const {
    Bitset b(n_);
    const uint64_t* r = row(v);
    for (int w = 0; w < nwords_; ++w) b.words()[w] = r[w];
    return b;
}

namespace {

// BFS from `start`, writing distances (-1 = unreachable). Returns count reached.
int bfs(const Graph& g, int start, std::vector<int>& dist) {
    dist.assign(g.n(), -1);
    std::vector<int> queue;
    queue.reserve(g.n());
    queue.push_back(start);
    dist[start] = 0;
    int reached = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int v = 0; v < g.n(); ++v) {
            if (dist[v] < 0 && g.adjacent(u, v)) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
                ++reached;
            }
        }
    }
    return reached;
}

} // namespace

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    std::vector<int> dist;
    return bfs(g, 0, dist) == g.n();
}

GraphStats graph_stats(const Graph& g) {
    GraphStats s;
    s.n = g.n();
    s.m = g.m();
    if (g.n() == 0) {
        s.connected = true;
        s.bipartite = true;
        s.regular = true;
        s.regular_degree = 0;
        return s;
    }
    s.max_degree = 0;
    s.min_degree = g.n();
    for (int v = 0; v < g.n(); ++v) {
        s.max_degree = std::max(s.max_degree, g.degree(v));
        s.min_degree = std::min(s.min_degree, g.degree(v));
    }
    s.regular = s.max_degree == s.min_degree;
    if (s.regular) s.regular_degree = s.max_degree;

    // Connectivity and diameter via all-sources BFS (graphs here are small).
    std::vector<int> dist;
    s.connected = bfs(g, 0, dist) == g.n();
    if (s.connected) {
        int diam = 0;
        for (int v = 0; v < g.n(); ++v) {
            bfs(g, v, dist);
            for (int u = 0; u < g.n(); ++u) diam = std::max(diam, dist[u]);
        }
        s.diameter = diam;
    }

    // 2-coloring per component.
    std::vector<int> color(g.n(), -1);
    s.bipartite = true;
    for (int start = 0; start < g.n() && s.bipartite; ++start) {
        if (color[start] >= 0) continue;
        color[start] = 0;
        std::vector<int> queue{start};
        for (size_t qi = 0; qi < queue.size() && s.bipartite; ++qi) {
            int u = queue[qi];
            for (int v = 0; v < g.n(); ++v) {
                if (!g.adjacent(u, v)) continue;
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    s.bipartite = false;
                    break;
                }
            }
        }
    }

    s.tree = s.connected && s.m == s.n - 1;
    s.complete = s.m == s.n * (s.n - 1) / 2;
    s.cycle = s.connected && s.regular && s.regular_degree == 2 && s.n >= 3;

    if (s.connected && s.bipartite && s.n >= 2) {
        int left = static_cast<int>(std::count(color.begin(), color.end(), 0));
        int right = s.n - left;
        if (left == right && s.m == left * right) {
            // All cross pairs must be present; edge count equality suffices
            // because bipartiteness forbids any same-side edge.
            s.balanced_complete_bipartite = true;
            s.bipartite_side = left;
        }
    }
    return s;
}

Graph line_graph(const Graph& g) {
    const auto& edges = g.edges();
    int m = static_cast<int>(edges.size());
    std::vector<std::pair<int, int>> le;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) le.emplace_back(i, j);
        }
    return Graph::from_edges(m, std::move(le));
}

} // namespace clut
