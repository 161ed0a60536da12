#include "clut/clutter.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "clut/errors.hpp"

namespace clut {

namespace {

size_t default_enum_cap() {
    if (const char* env = std::getenv("CLUT_ENUM_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<size_t>(v);
    }
    return 1000000;
}

} // namespace

EnumLimits::EnumLimits() : max_edges(default_enum_cap()) {}

Clutter make_clutter(int ground, std::vector<Bitset> edges, bool validate_antichain) {
    if (ground < 0) throw InputError("clutter ground set size must be non-negative");
    if (ground > (1 << 20)) throw InputError("clutter ground set size exceeds 2^20");
    for (const Bitset& e : edges) {
        if (e.universe() != ground)
            throw InputError("clutter edge universe (" + std::to_string(e.universe()) +
                             ") does not match ground set size (" + std::to_string(ground) + ")");
    }
    std::sort(edges.begin(), edges.end(),
              [](const Bitset& a, const Bitset& b) { return lex_less(a, b); });
    if (validate_antichain) {
        for (size_t i = 0; i < edges.size(); ++i) {
            for (size_t j = 0; j < edges.size(); ++j) {
                if (i == j) continue;
                if (edges[j].contains(edges[i])) {
                    if (edges[i] == edges[j])
                        throw InputError("duplicate clutter edge at indices " + std::to_string(i) +
                                         " and " + std::to_string(j));
                    throw InputError("clutter is not an antichain: edge " + std::to_string(i) +
                                     " is contained in edge " + std::to_string(j));
                }
            }
        }
    }
    Clutter l;
    l.ground = ground;
    l.edges = std::move(edges);
    return l;
}

// Maximal independent sets of g = maximal cliques of the complement graph,
// found by pivoted recursive expansion (Bron–Kerbosch) over packed rows.
Clutter maximal_independent_sets(const Graph& g, const EnumLimits& limits) {
    const int n = g.n();
    const int nw = words_for(n);
    // Complement adjacency rows, self-loops excluded.
    std::vector<uint64_t> crow(static_cast<size_t>(std::max(n, 1)) * nw, 0);
    Bitset all = Bitset::full(n);
    for (int v = 0; v < n; ++v) {
        Bitset r = g.neighbors(v).complement();
        r.reset(v);
        for (int w = 0; w < nw; ++w) crow[static_cast<size_t>(v) * nw + w] = r.word(w);
    }

    std::vector<Bitset> out;
    // Per-depth scratch: current candidate set P, excluded set X, and the
    // snapshot of pivot-filtered candidates being iterated.
    std::vector<uint64_t> parena(static_cast<size_t>(n + 1) * nw);
    std::vector<uint64_t> xarena(static_cast<size_t>(n + 1) * nw);
    std::vector<uint64_t> carena(static_cast<size_t>(n + 1) * nw);
    Bitset R(n);

    auto words_any = [nw](const uint64_t* w) {
        for (int i = 0; i < nw; ++i)
            if (w[i]) return true;
        return false;
    };

    auto expand = [&](auto&& self, int depth) -> void {
        uint64_t* P = parena.data() + static_cast<size_t>(depth) * nw;
        uint64_t* X = xarena.data() + static_cast<size_t>(depth) * nw;
        if (!words_any(P) && !words_any(X)) {
            if (out.size() >= limits.max_edges)
                throw BudgetError("independent-set enumeration exceeded the cap of " +
                                  std::to_string(limits.max_edges) + " sets (" +
                                  std::to_string(out.size()) + " found so far)");
            out.push_back(R);
            return;
        }
        // Pivot: vertex of P ∪ X with the most complement-neighbours in P.
        int pivot = -1, best = -1;
        for (int wi = 0; wi < nw; ++wi) {
            uint64_t cand = P[wi] | X[wi];
            while (cand) {
                int u = wi * 64 + std::countr_zero(cand);
                cand &= cand - 1;
                const uint64_t* cu = crow.data() + static_cast<size_t>(u) * nw;
                int cnt = 0;
                for (int i = 0; i < nw; ++i) cnt += std::popcount(P[i] & cu[i]);
                if (cnt > best) {
                    best = cnt;
                    pivot = u;
                }
            }
        }
        uint64_t* C = carena.data() + static_cast<size_t>(depth) * nw;
        const uint64_t* cp = crow.data() + static_cast<size_t>(pivot) * nw;
        for (int i = 0; i < nw; ++i) C[i] = P[i] & ~cp[i];
        for (int wi = 0; wi < nw; ++wi) {
            while (C[wi]) {
                int v = wi * 64 + std::countr_zero(C[wi]);
                C[wi] &= C[wi] - 1;
                const uint64_t* cv = crow.data() + static_cast<size_t>(v) * nw;
                uint64_t* P2 = parena.data() + static_cast<size_t>(depth + 1) * nw;
                uint64_t* X2 = xarena.data() + static_cast<size_t>(depth + 1) * nw;
                for (int i = 0; i < nw; ++i) {
                    P2[i] = P[i] & cv[i];
                    X2[i] = X[i] & cv[i];
                }
                R.set(v);
                self(self, depth + 1);
                R.reset(v);
                P[wi] &= ~(uint64_t(1) << (v & 63));
                X[wi] |= uint64_t(1) << (v & 63);
            }
        }
    };

    for (int i = 0; i < nw; ++i) {
        parena[i] = all.word(i);
        xarena[i] = 0;
    }
    expand(expand, 0);

    return make_clutter(n, std::move(out), /*validate_antichain=*/false);
}

Bitset extend_to_maximal_independent(const Graph& g, const Bitset& seed) {
    const int n = g.n();
    if (seed.universe() != n)
        throw InputError("seed universe does not match the graph order");
    for (int v = seed.first(); v >= 0; v = seed.next(v)) {
        Bitset nb = g.neighbors(v);
        nb &= seed;
        if (nb.any())
            throw InputError("seed is not independent: vertices " + std::to_string(v) + " and " +
                             std::to_string(nb.first()) + " are adjacent");
    }
    Bitset u = seed;
    Bitset blocked = seed; // U together with its neighbourhood
    for (int v = seed.first(); v >= 0; v = seed.next(v)) blocked |= g.neighbors(v);
    Bitset eligible = blocked.complement();
    for (int v = eligible.first(); v >= 0; v = eligible.next(v)) {
        if (blocked.test(v)) continue;
        u.set(v);
        blocked.set(v);
        blocked |= g.neighbors(v);
    }
    return u;
}

MatchingClutter maximal_matchings(const Graph& g, const EnumLimits& limits) {
    MatchingClutter mm;
    mm.line = line_graph(g);
    mm.edge_map = g.edges();
    mm.clutter = maximal_independent_sets(mm.line, limits);
    return mm;
}

Graph derived_graph(const Clutter& l) {
    const int n = l.ground;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool together = false;
            for (const Bitset& e : l.edges) {
                if (e.test(u) && e.test(v)) {
                    together = true;
                    break;
                }
            }
            if (!together) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

} // namespace clut
