#include <chrono>
#include <string>
#include <thread>
#include <vector>

#include "clut/clutter.hpp"
#include "clut/errors.hpp"
#include "clut/kernels.hpp"
#include "clut/setcover.hpp"

namespace clut {

namespace {

// Clutter edges packed into a contiguous row matrix for the superset kernel.
struct EdgeMatrix {
    int nrows = 0;
    int nwords = 0;
    std::vector<uint64_t> rows;

    explicit EdgeMatrix(const Clutter& l) {
        nrows = static_cast<int>(l.edges.size());
        nwords = words_for(l.ground);
        rows.assign(static_cast<size_t>(nrows) * nwords, 0);
        for (int i = 0; i < nrows; ++i)
            for (int w = 0; w < nwords; ++w)
                rows[static_cast<size_t>(i) * nwords + w] = l.edges[i].word(w);
    }
};

// Adjacency rows of the vertices outside U, for the domination form of the
// recognizing test (subset recognizes U iff it dominates everything outside).
struct OutsideRows {
    int nrows = 0;
    int nwords = 0;
    std::vector<uint64_t> rows;

    OutsideRows(const Graph& g, const Bitset& u) {
        nwords = g.nwords();
        for (int v = 0; v < g.n(); ++v) {
            if (u.test(v)) continue;
            const uint64_t* r = g.row(v);
            rows.insert(rows.end(), r, r + nwords);
            ++nrows;
        }
    }
};

void check_edge_index(const Clutter& l, int edge_index) {
    if (edge_index < 0 || edge_index >= static_cast<int>(l.edges.size()))
        throw InputError("edge index " + std::to_string(edge_index) + " out of range (clutter has " +
                         std::to_string(l.edges.size()) + " edges)");
}

void check_maximal_independent(const Graph& g, const Bitset& u) {
    if (u.universe() != g.n())
        throw InputError("set universe does not match the graph order");
    for (int v = 0; v < g.n(); ++v) {
        Bitset nb = g.neighbors(v);
        nb &= u;
        if (u.test(v)) {
            if (nb.any())
                throw InputError("set is not independent: vertices " + std::to_string(v) + " and " +
                                 std::to_string(nb.first()) + " are adjacent");
        } else if (nb.none()) {
            throw InputError("independent set is not maximal: vertex " + std::to_string(v) +
                             " could be added");
        }
    }
}

// Shared per-clutter solve state.  When `g` is non-null the clutter must be
// the maximal-independent-set clutter of *g and the cheaper domination
// feasibility test replaces the all-edges superset scan.
struct SolveCtx {
    const Clutter& l;
    EdgeMatrix matrix;
    const Graph* g;

    SolveCtx(const Clutter& lutter, const Graph* graph) : l(lutter), matrix(lutter), g(graph) {
        if (g && g->n() != l.ground)
            throw InputError("graph order does not match the clutter ground set");
    }

    EdgeComplexity solve(int edge_index, RecogMethod method, bool* exact_out) const {
        const Bitset& edge = l.edges[edge_index];
        if (g) check_maximal_independent(*g, edge);

        OutsideRows outside = g ? OutsideRows(*g, edge) : OutsideRows(Graph::edgeless(0), Bitset(0));
        const int nw = matrix.nwords;
        auto feasible = [&](const uint64_t* mask) -> bool {
            if (g)
                return kern::ops().all_rows_intersect(outside.rows.data(), outside.nrows,
                                                      outside.nwords, mask);
            return kern::ops().find_superset(matrix.rows.data(), matrix.nrows, nw, mask,
                                             edge_index) < 0;
        };

        std::vector<int> elems = edge.to_vector();
        const int k = static_cast<int>(elems.size());
        EdgeComplexity out;
        out.edge_index = edge_index;
        bool exact = true;

        std::vector<int> picked;
        if (method == RecogMethod::exact && k <= 20) {
            picked = smallest_by_deepening(feasible, elems, nw);
        } else {
            SetCoverInstance inst = as_set_cover(edge_index, elems, outside);
            SetCoverResult sc =
                method == RecogMethod::exact ? min_set_cover(inst) : greedy_set_cover(inst);
            exact = sc.exact;
            for (int idx : sc.chosen) picked.push_back(elems[idx]);
        }

        out.min_set = Bitset::from_vector(l.ground, picked);
        out.c = Rational(static_cast<long long>(picked.size()), std::max(k, 1));
        if (exact_out) *exact_out = exact;
        return out;
    }

    // Iterative deepening over subset size; within each size, candidate
    // subsets are visited in canonical set order, so the first feasible one
    // is the canonical minimum.
    template <class Feasible>
    std::vector<int> smallest_by_deepening(const Feasible& feasible, const std::vector<int>& elems,
                                           int nw) const {
        const int k = static_cast<int>(elems.size());
        std::vector<uint64_t> mask(static_cast<size_t>(std::max(nw, 1)), 0);
        if (feasible(mask.data())) return {};
        std::vector<int> comb;
        for (int s = 1; s <= k; ++s) {
            comb.assign(static_cast<size_t>(s), 0);
            for (int i = 0; i < s; ++i) comb[i] = i;
            for (;;) {
                for (int w = 0; w < nw; ++w) mask[w] = 0;
                for (int i = 0; i < s; ++i) {
                    int e = elems[comb[i]];
                    mask[e >> 6] |= uint64_t(1) << (e & 63);
                }
                if (feasible(mask.data())) {
                    std::vector<int> res;
                    for (int i = 0; i < s; ++i) res.push_back(elems[comb[i]]);
                    return res;
                }
                // Next s-combination of {0..k-1} in lexicographic order.
                int i = s - 1;
                while (i >= 0 && comb[i] == k - s + i) --i;
                if (i < 0) break;
                ++comb[i];
                for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
            }
        }
        // An edge always recognizes itself in an antichain, so the loop
        // cannot fall through; reaching here means the precondition (the
        // clutter really is the MIS clutter of *g) was violated.
        throw InputError("no recognizing subset found: clutter/graph mismatch");
    }

    // The recognizing search as minimum set cover.  Domination route:
    // elements of the edge must jointly dominate every outside vertex.
    // Containment route: every other edge must miss at least one picked
    // element.
    SetCoverInstance as_set_cover(int edge_index, const std::vector<int>& elems,
                                  const OutsideRows& outside) const {
        SetCoverInstance inst;
        const int k = static_cast<int>(elems.size());
        if (g) {
            inst.universe = outside.nrows;
            for (int j = 0; j < k; ++j) {
                Bitset cover(inst.universe);
                for (int r = 0; r < outside.nrows; ++r) {
                    const uint64_t* row = outside.rows.data() +
                                          static_cast<size_t>(r) * outside.nwords;
                    int e = elems[j];
                    if ((row[e >> 6] >> (e & 63)) & 1u) cover.set(r);
                }
                inst.sets.push_back(std::move(cover));
            }
        } else {
            const int others = matrix.nrows - 1;
            inst.universe = others;
            for (int j = 0; j < k; ++j) {
                Bitset cover(inst.universe);
                int slot = 0;
                for (int r = 0; r < matrix.nrows; ++r) {
                    if (r == edge_index) continue;
                    int e = elems[j];
                    const uint64_t* row = matrix.rows.data() +
                                          static_cast<size_t>(r) * matrix.nwords;
                    if (!((row[e >> 6] >> (e & 63)) & 1u)) cover.set(slot);
                    ++slot;
                }
                inst.sets.push_back(std::move(cover));
            }
        }
        return inst;
    }
};

} // namespace

bool is_recognizing(const Clutter& l, int edge_index, const Bitset& subset) {
    check_edge_index(l, edge_index);
    if (subset.universe() != l.ground)
        throw InputError("subset universe does not match the clutter ground set");
    if (!l.edges[edge_index].contains(subset))
        throw InputError("subset is not contained in the chosen edge");
    EdgeMatrix m(l);
    return kern::ops().find_superset(m.rows.data(), m.nrows, m.nwords, subset.words(),
                                     edge_index) < 0;
}

bool is_recognizing_mis(const Graph& g, const Bitset& U, const Bitset& subset) {
    check_maximal_independent(g, U);
    if (subset.universe() != g.n())
        throw InputError("subset universe does not match the graph order");
    if (!U.contains(subset)) throw InputError("subset is not contained in the independent set");
    OutsideRows outside(g, U);
    return kern::ops().all_rows_intersect(outside.rows.data(), outside.nrows, outside.nwords,
                                          subset.words());
}

RecognizingResult min_recognizing_set(const Clutter& l, int edge_index, RecogMethod method,
                                      const Graph* mis_graph) {
    check_edge_index(l, edge_index);
    SolveCtx ctx(l, mis_graph);
    bool exact = true;
    EdgeComplexity ec = ctx.solve(edge_index, method, &exact);
    RecognizingResult r;
    r.edge_index = edge_index;
    r.min_set = std::move(ec.min_set);
    r.complexity = ec.c;
    r.exact = exact;
    return r;
}

ComplexityReport clutter_complexity(const Clutter& l, const Graph* mis_graph, RecogMethod method,
                                    int jobs) {
    if (l.edges.empty()) throw InputError("complexity of a clutter with no edges is undefined");
    auto t0 = std::chrono::steady_clock::now();
    SolveCtx ctx(l, mis_graph);
    const int nedges = static_cast<int>(l.edges.size());

    ComplexityReport rep;
    rep.ground = l.ground;
    rep.per_edge.assign(static_cast<size_t>(nedges), EdgeComplexity{});

    auto run_range = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) rep.per_edge[i] = ctx.solve(i, method, nullptr);
    };
    int workers = std::max(1, std::min(jobs, nedges));
    if (workers == 1) {
        run_range(0, nedges);
    } else {
        // Static slices keep the output independent of scheduling.
        std::vector<std::thread> pool;
        int base = nedges / workers, extra = nedges % workers, lo = 0;
        for (int w = 0; w < workers; ++w) {
            int hi = lo + base + (w < extra ? 1 : 0);
            pool.emplace_back(run_range, lo, hi);
            lo = hi;
        }
        for (auto& th : pool) th.join();
    }

    rep.exact = method == RecogMethod::exact;
    rep.c = Rational(0, 1);
    rep.argmax_edge = 0;
    for (int i = 0; i < nedges; ++i) {
        if (i == 0 || rep.per_edge[i].c > rep.c) {
            rep.c = rep.per_edge[i].c;
            rep.argmax_edge = i;
        }
    }
    rep.elapsed_sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

ComplexityReport graph_complexity(const Graph& g, const EnumLimits& limits, int jobs) {
    Clutter mis = maximal_independent_sets(g, limits);
    return clutter_complexity(mis, &g, RecogMethod::exact, jobs);
}

MatchingReport matching_complexity(const Graph& g, const EnumLimits& limits, int jobs) {
    if (g.m() == 0)
        throw InputError("matching complexity of an edgeless graph is undefined");
    MatchingClutter mm = maximal_matchings(g, limits);
    MatchingReport out;
    out.report = clutter_complexity(mm.clutter, &mm.line, RecogMethod::exact, jobs);
    out.edge_map = mm.edge_map;
    return out;
}

} // namespace clut
