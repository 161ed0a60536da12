#include "clut/census.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "clut/errors.hpp"

namespace clut {
namespace {

constexpr int kMaxSmall = 11;

// Adjacency as one bitmask per vertex; fits because kMaxSmall <= 16.
using AdjArray = std::array<std::uint16_t, kMaxSmall>;
using ColorArray = std::array<std::uint64_t, kMaxSmall>;

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

std::uint64_t combine(std::uint64_t seed, std::uint64_t value) {
    return mix64(seed ^ (value + 0x9E3779B97F4A7C15ull + (seed << 6) + (seed >> 2)));
}

AdjArray small_adj(const SmallGraph& sg) {
    AdjArray adj{};
    for (int v = 1; v < sg.n; ++v)
        for (int u = 0; u < v; ++u)
            if (sg.bits >> pair_bit(sg.n, u, v) & 1) {
                adj[u] |= std::uint16_t(1u << v);
                adj[v] |= std::uint16_t(1u << u);
            }
    return adj;
}

SmallGraph adj_to_small(int n, const AdjArray& adj) {
    SmallGraph sg{n, 0};
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (adj[u] >> v & 1) sg.bits |= std::uint64_t(1) << pair_bit(n, u, v);
    return sg;
}

// Colour refinement seeded with (degree, triangle count) so that regular
// graphs do not collapse to a single colour, followed by a fixed number of
// neighbourhood-multiset rounds.  The result is a deterministic function of
// the isomorphism class restricted to each vertex, which makes the colours
// safe both as hash material and as hard matching constraints.
ColorArray wl_colors(int n, const AdjArray& adj) {
    std::array<int, kMaxSmall> tri{};
    for (int v = 0; v < n; ++v) {
        int t = 0;
        for (std::uint16_t rest = adj[v]; rest;) {
            const int u = std::countr_zero(rest);
            rest = std::uint16_t(rest & (rest - 1));
            t += std::popcount(std::uint16_t(adj[v] & adj[u]));
        }
        tri[v] = t / 2;
    }
    ColorArray col{};
    for (int v = 0; v < n; ++v)
        col[v] = mix64(std::uint64_t(std::popcount(adj[v])) * 1000003u + std::uint64_t(tri[v]));
    ColorArray next{};
    for (int round = 0; round < 3; ++round) {
        for (int v = 0; v < n; ++v) {
            std::array<std::uint64_t, kMaxSmall> nb{};
            int cnt = 0;
            for (std::uint16_t rest = adj[v]; rest;) {
                const int u = std::countr_zero(rest);
                rest = std::uint16_t(rest & (rest - 1));
                nb[cnt++] = col[u];
            }
            std::sort(nb.begin(), nb.begin() + cnt);
            std::uint64_t h = combine(0x5851F42D4C957F2Dull, col[v]);
            for (int i = 0; i < cnt; ++i) h = combine(h, nb[i]);
            next[v] = h;
        }
        col = next;
    }
    return col;
}

std::uint64_t census_hash(int n, const AdjArray& adj, const ColorArray& col) {
    int m = 0;
    for (int v = 0; v < n; ++v) m += std::popcount(adj[v]);
    ColorArray sorted = col;
    std::sort(sorted.begin(), sorted.begin() + n);
    std::uint64_t h = mix64(std::uint64_t(n) * 0x100000001B3ull + std::uint64_t(m / 2));
    for (int v = 0; v < n; ++v) h = combine(h, sorted[v]);
    return h;
}

// Exact isomorphism test between same-order graphs, used to confirm or refute
// hash-bucket collisions.  Vertices are matched rare-colour-first and a
// candidate image must agree with every previously mapped vertex.
bool isomorphic(int n, const AdjArray& a, const ColorArray& ca, const AdjArray& b,
                const ColorArray& cb) {
    ColorArray sa = ca;
    ColorArray sb = cb;
    std::sort(sa.begin(), sa.begin() + n);
    std::sort(sb.begin(), sb.begin() + n);
    if (!std::equal(sa.begin(), sa.begin() + n, sb.begin())) return false;

    std::array<int, kMaxSmall> order{};
    for (int v = 0; v < n; ++v) order[v] = v;
    const auto freq = [&](std::uint64_t c) {
        return int(std::count(sa.begin(), sa.begin() + n, c));
    };
    std::sort(order.begin(), order.begin() + n, [&](int x, int y) {
        const int fx = freq(ca[x]);
        const int fy = freq(ca[y]);
        if (fx != fy) return fx < fy;
        if (ca[x] != ca[y]) return ca[x] < ca[y];
        return x < y;
    });

    std::array<int, kMaxSmall> image{};
    std::uint16_t used = 0;
    const auto dfs = [&](const auto& self, int depth) -> bool {
        if (depth == n) return true;
        const int v = order[depth];
        for (int w = 0; w < n; ++w) {
            if (used >> w & 1) continue;
            if (cb[w] != ca[v]) continue;
            bool ok = true;
            for (int j = 0; j < depth && ok; ++j) {
                const int u = order[j];
                ok = ((a[v] >> u & 1) == (b[w] >> image[u] & 1));
            }
            if (!ok) continue;
            image[v] = w;
            used |= std::uint16_t(1u << w);
            if (self(self, depth + 1)) return true;
            used &= std::uint16_t(~(1u << w));
        }
        return false;
    };
    return dfs(dfs, 0);
}

bool adj_connected(int n, const AdjArray& adj) {
    if (n <= 1) return true;
    std::uint16_t seen = 1;
    std::uint16_t frontier = 1;
    while (frontier) {
        std::uint16_t grow = 0;
        for (std::uint16_t rest = frontier; rest;) {
            const int v = std::countr_zero(rest);
            rest = std::uint16_t(rest & (rest - 1));
            grow |= adj[v];
        }
        frontier = std::uint16_t(grow & ~seen);
        seen |= grow;
    }
    return seen == std::uint16_t((1u << n) - 1);
}

// Deduplicating accumulator: keeps the first representative of each
// isomorphism class, in insertion order.
struct ClassStore {
    struct Entry {
        SmallGraph sg;
        AdjArray adj;
        ColorArray col;
    };
    std::vector<Entry> entries;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;

    bool insert(int n, const AdjArray& adj) {
        const ColorArray col = wl_colors(n, adj);
        auto& bucket = buckets[census_hash(n, adj, col)];
        for (const std::uint32_t idx : bucket)
            if (isomorphic(n, adj, col, entries[idx].adj, entries[idx].col)) return false;
        bucket.push_back(std::uint32_t(entries.size()));
        entries.push_back(Entry{adj_to_small(n, adj), adj, col});
        return true;
    }

    std::vector<SmallGraph> take() {
        std::vector<SmallGraph> out;
        out.reserve(entries.size());
        for (const Entry& e : entries) out.push_back(e.sg);
        return out;
    }
};

// Canonical encoding of a rooted tree: children encodings sorted then wrapped.
std::string encode_rooted(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> parts;
    for (const int u : adj[v])
        if (u != parent) parts.push_back(encode_rooted(adj, u, v));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const std::string& p : parts) out += p;
    out += ')';
    return out;
}

std::string tree_canonical(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    // Peel leaves layer by layer; the last one or two vertices are the centres.
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = int(adj[v].size());
    std::vector<int> layer;
    std::vector<char> removed(n, 0);
    int remaining = n;
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    while (remaining > 2) {
        std::vector<int> nextlayer;
        for (const int v : layer) {
            removed[v] = 1;
            --remaining;
            for (const int u : adj[v])
                if (!removed[u] && --deg[u] == 1) nextlayer.push_back(u);
        }
        layer = std::move(nextlayer);
    }
    std::vector<int> centres;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) centres.push_back(v);
    if (centres.size() == 1) return encode_rooted(adj, centres[0], -1);
    std::string s1 = encode_rooted(adj, centres[0], centres[1]);
    std::string s2 = encode_rooted(adj, centres[1], centres[0]);
    if (s2 < s1) std::swap(s1, s2);
    return s1 + s2;
}

} // namespace

int pair_bit(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    // Pairs with smaller high vertex first: bit index = C(v, 2) + u.
    (void)n;
    return v * (v - 1) / 2 + u;
}

Graph small_to_graph(const SmallGraph& sg) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < sg.n; ++v)
        for (int u = 0; u < v; ++u)
            if (sg.bits >> pair_bit(sg.n, u, v) & 1) edges.emplace_back(u, v);
    return Graph::from_edges(sg.n, edges);
}

SmallGraph graph_to_small(const Graph& g) {
    if (g.n() > kMaxSmall) throw InputError("compact graph form supports at most 11 vertices");
    SmallGraph sg{g.n(), 0};
    for (const auto& [u, v] : g.edges()) sg.bits |= std::uint64_t(1) << pair_bit(g.n(), u, v);
    return sg;
}

std::vector<SmallGraph> all_graphs(int n) {
    if (n < 1 || n > 9) throw InputError("full graph census supports 1 <= n <= 9");
    std::vector<SmallGraph> reps = {SmallGraph{1, 0}};
    for (int k = 2; k <= n; ++k) {
        ClassStore store;
        for (const SmallGraph& parent : reps) {
            const AdjArray base = small_adj(parent);
            for (std::uint32_t attach = 0; attach < (1u << (k - 1)); ++attach) {
                AdjArray adj = base;
                adj[k - 1] = std::uint16_t(attach);
                for (std::uint16_t rest = std::uint16_t(attach); rest;) {
                    const int v = std::countr_zero(rest);
                    rest = std::uint16_t(rest & (rest - 1));
                    adj[v] |= std::uint16_t(1u << (k - 1));
                }
                store.insert(k, adj);
            }
        }
        reps = store.take();
    }
    return reps;
}

std::vector<SmallGraph> connected_graphs(int n) {
    std::vector<SmallGraph> out;
    for (const SmallGraph& sg : all_graphs(n))
        if (adj_connected(sg.n, small_adj(sg))) out.push_back(sg);
    return out;
}

std::vector<SmallGraph> connected_regular_graphs(int n) {
    if (n < 1 || n > 10) throw InputError("regular graph census supports 1 <= n <= 10");
    std::vector<SmallGraph> out;
    if (n <= 9) {
        for (const SmallGraph& sg : all_graphs(n)) {
            const AdjArray adj = small_adj(sg);
            const int d = std::popcount(adj[0]);
            bool regular = true;
            for (int v = 1; v < n && regular; ++v) regular = (std::popcount(adj[v]) == d);
            if (regular && adj_connected(n, adj)) out.push_back(sg);
        }
        return out;
    }
    // n == 10: an r-regular graph minus a vertex has exactly r vertices of
    // degree r-1 and 10-1-r of degree r, so scanning the 9-vertex census and
    // re-attaching a vertex to the degree-deficient set reaches every class.
    const std::vector<SmallGraph> parents = all_graphs(9);
    for (int r = 1; r <= 9; ++r) {
        ClassStore store;
        for (const SmallGraph& parent : parents) {
            const AdjArray base = small_adj(parent);
            std::uint16_t attach = 0;
            int deficient = 0;
            bool fits = true;
            for (int v = 0; v < 9 && fits; ++v) {
                const int d = std::popcount(base[v]);
                if (d == r - 1) {
                    attach |= std::uint16_t(1u << v);
                    ++deficient;
                } else if (d != r) {
                    fits = false;
                }
            }
            if (!fits || deficient != r) continue;
            AdjArray adj = base;
            adj[9] = attach;
            for (std::uint16_t rest = attach; rest;) {
                const int v = std::countr_zero(rest);
                rest = std::uint16_t(rest & (rest - 1));
                adj[v] |= std::uint16_t(1u << 9);
            }
            if (!adj_connected(10, adj)) continue;
            store.insert(10, adj);
        }
        for (const SmallGraph& sg : store.take()) out.push_back(sg);
    }
    return out;
}

std::vector<Graph> all_trees(int n) {
    if (n < 1 || n > 16) throw InputError("tree census supports 1 <= n <= 16");
    std::vector<std::vector<std::pair<int, int>>> level = {{}};
    for (int k = 2; k <= n; ++k) {
        std::vector<std::vector<std::pair<int, int>>> next;
        std::unordered_set<std::string> seen;
        for (const auto& edges : level)
            for (int v = 0; v < k - 1; ++v) {
                auto grown = edges;
                grown.emplace_back(v, k - 1);
                if (seen.insert(tree_canonical(k, grown)).second) next.push_back(std::move(grown));
            }
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (const auto& edges : level) out.push_back(Graph::from_edges(n, edges));
    return out;
}

} // namespace clut
