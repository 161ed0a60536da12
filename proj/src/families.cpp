#include "clut/families.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "clut/errors.hpp"

namespace clut {

namespace {

// splitmix64: the witness search needs nothing fancier, just determinism.
uint64_t next_u64(uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace

Graph main_bound_extremal(int n) {
    if (n < 1)
        throw InputError("main_bound_extremal needs n >= 1");
    const long long total = static_cast<long long>(n) * n + 1;
    if (total > Graph::vertex_cap())
        throw InputError("extremal graph needs " + std::to_string(total) +
                         " vertices, above the vertex cap of " +
                         std::to_string(Graph::vertex_cap()));

    const int apex = n;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        edges.emplace_back(i, apex);
        for (int t = 0; t < n - 1; ++t)
            edges.emplace_back(i, n + 1 + i * (n - 1) + t);
    }
    Graph g = Graph::from_edges(static_cast<int>(total), std::move(edges));

    GraphStats st = graph_stats(g);
    if (g.n() != total || st.max_degree != 2 * n - 1 || !st.connected)
        throw Error("extremal family postcondition failed at n = " + std::to_string(n));
    if (n <= 4) {
        ComplexityReport r = graph_complexity(g);
        const Rational want(1, static_cast<long long>(n) * n - 2 * n + 2);
        if (!(r.c == want))
            throw Error("extremal family complexity " + r.c.str() + " at n = " +
                        std::to_string(n) + ", expected " + want.str());
    }
    return g;
}

Graph all_rationals_graph(int m, int n) {
    if (m < 1 || n < m)
        throw InputError("all_rationals_graph needs 1 <= m <= n");
    const int s = n - m + 1;
    const long long total = 2LL * n + 1;
    if (total > Graph::vertex_cap())
        throw InputError("graph needs " + std::to_string(total) +
                         " vertices, above the vertex cap of " +
                         std::to_string(Graph::vertex_cap()));

    // a = 0, S = 1..s, T = s+1..2s, X = 2s+1..2s+m-1, Y = 2s+m..2s+2m-2.
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= s; ++i) {
        edges.emplace_back(0, i);
        for (int j = s + 1; j <= 2 * s; ++j) edges.emplace_back(i, j);
    }
    for (int i = 1; i <= m - 1; ++i) {
        edges.emplace_back(0, 2 * s + i);
        edges.emplace_back(2 * s + i, 2 * s + (m - 1) + i);
    }
    Graph g = Graph::from_edges(static_cast<int>(total), std::move(edges));

    GraphStats st = graph_stats(g);
    if (!st.connected || !st.bipartite)
        throw Error("all-rationals family postcondition failed at m = " + std::to_string(m) +
                    ", n = " + std::to_string(n));
    if (n <= 6) {
        Clutter mis = maximal_independent_sets(g);
        ComplexityReport r = clutter_complexity(mis, &g);
        const Rational want(m, n), hub_value(1, n + 1);
        if (!(r.c == want))
            throw Error("all-rationals family complexity " + r.c.str() + ", expected " +
                        want.str());
        for (const EdgeComplexity& e : r.per_edge) {
            const bool has_hub = mis.edges[e.edge_index].test(0);
            const Rational& expect = has_hub ? hub_value : want;
            if (!(e.c == expect))
                throw Error("all-rationals per-edge complexity " + e.c.str() +
                            (has_hub ? " with" : " without") + " the hub, expected " +
                            expect.str());
        }
    }
    return g;
}

AddendumFamily addendum_clutter(int k) {
    if (k < 2)
        throw InputError("addendum_clutter needs k >= 2");
    const long long total = static_cast<long long>(k) * k;
    if (total > Graph::vertex_cap())
        throw InputError("clutter ground needs " + std::to_string(total) +
                         " vertices, above the vertex cap of " +
                         std::to_string(Graph::vertex_cap()));

    const int nv = static_cast<int>(total);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
        for (int t = 0; t < k - 1; ++t) edges.emplace_back(i, k + i * (k - 1) + t);
    }

    AddendumFamily fam;
    fam.k = k;
    fam.graph = Graph::from_edges(nv, std::move(edges));
    fam.omitted = Bitset(nv);
    for (int v = k; v < nv; ++v) fam.omitted.set(v);

    Clutter all = maximal_independent_sets(fam.graph);
    std::vector<Bitset> kept;
    bool found = false;
    for (const Bitset& e : all.edges) {
        if (e == fam.omitted) {
            found = true;
            continue;
        }
        kept.push_back(e);
    }
    if (!found || static_cast<int>(kept.size()) != k)
        throw Error("addendum family has unexpected maximal independent sets at k = " +
                    std::to_string(k));
    fam.clutter = make_clutter(nv, std::move(kept), /*validate_antichain=*/false);

    Bitset covered(nv);
    Bitset common = Bitset::full(nv);
    for (const Bitset& e : fam.clutter.edges) {
        covered |= e;
        common &= e;
    }
    if (!covered.contains(Bitset::full(nv)) || common.any())
        throw Error("addendum family hypothesis check failed at k = " + std::to_string(k));

    ComplexityReport r = clutter_complexity(fam.clutter);
    const Rational want(1, static_cast<long long>(k) * k - 2 * k + 2);
    if (!(r.c == want))
        throw Error("addendum family complexity " + r.c.str() + " at k = " + std::to_string(k) +
                    ", expected " + want.str());
    const SurdCheck sc = compare_to_surd_lower_bound(r.c, total + 1, total - 1);
    if (sc.holds)
        throw Error("addendum family complexity " + r.c.str() +
                    " unexpectedly meets the surd bound at k = " + std::to_string(k));
    return fam;
}

WitnessSearchResult rational_witness_search(const Rational& target, int max_vertices,
                                            unsigned long long seed, int random_attempts) {
    if (Rational(1, 1) < target)
        throw InputError("target complexity must lie in [0, 1]");
    if (max_vertices > Graph::vertex_cap())
        throw InputError("max_vertices above the vertex cap of " +
                         std::to_string(Graph::vertex_cap()));

    WitnessSearchResult res;
    auto matches = [&](const Graph& g, std::string family) {
        if (g.m() == 0) return false;
        ++res.tried;
        if (!(matching_complexity(g).report.c == target)) return false;
        res.found = true;
        res.graph = g;
        res.family = std::move(family);
        return true;
    };

    for (int nv = 2; nv <= max_vertices; ++nv) {
        if (matches(Graph::path(nv), "path")) return res;
        if (nv >= 3 && matches(Graph::cycle(nv), "cycle")) return res;
        if (nv >= 3 && matches(Graph::complete(nv), "complete")) return res;
        if (nv >= 4 && matches(Graph::complete_bipartite(nv / 2, nv - nv / 2),
                               "complete_bipartite"))
            return res;
        // Subdivided stars: a legs of length one, b >= 1 legs of length two.
        for (int b = 1; 1 + 2 * b <= nv; ++b) {
            const int a = nv - 1 - 2 * b;
            std::vector<std::pair<int, int>> edges;
            for (int i = 1; i <= a; ++i) edges.emplace_back(0, i);
            for (int i = 0; i < b; ++i) {
                edges.emplace_back(0, a + 1 + 2 * i);
                edges.emplace_back(a + 1 + 2 * i, a + 2 + 2 * i);
            }
            if (matches(Graph::from_edges(nv, std::move(edges)),
                        "subdivided_star(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")"))
                return res;
        }
        // Brooms: a path of h vertices with the remaining nv-h leaves on its end.
        for (int h = 2; h < nv; ++h) {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i + 1 < h; ++i) edges.emplace_back(i, i + 1);
            for (int v = h; v < nv; ++v) edges.emplace_back(h - 1, v);
            if (matches(Graph::from_edges(nv, std::move(edges)),
                        "broom(handle=" + std::to_string(h) +
                            ",leaves=" + std::to_string(nv - h) + ")"))
                return res;
        }
    }

    uint64_t state = seed * 0x9E3779B97F4A7C15ull + 1;
    for (int nv = 2; nv <= max_vertices; ++nv) {
        for (int attempt = 1; attempt <= random_attempts; ++attempt) {
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < nv; ++u)
                for (int v = u + 1; v < nv; ++v)
                    if (next_u64(state) & 1) edges.emplace_back(u, v);
            Graph g = Graph::from_edges(nv, std::move(edges));
            if (!is_connected(g)) continue;
            if (matches(g, "random(n=" + std::to_string(nv) +
                               ",attempt=" + std::to_string(attempt) + ")"))
                return res;
        }
    }
    return res;
}

} // namespace clut
