#include "clut/bounds.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "clut/errors.hpp"

namespace clut {

const char* bound_kind_name(BoundKind kind) {
    switch (kind) {
        case BoundKind::gallai: return "gallai";
        case BoundKind::degree: return "degree";
        case BoundKind::main: return "main";
        case BoundKind::matching_lower: return "matching-lower";
        case BoundKind::regular_half: return "regular-half";
        case BoundKind::regular_two_thirds: return "regular-two-thirds";
        case BoundKind::regular_four: return "regular-four";
        case BoundKind::addendum: return "addendum";
    }
    return "?";
}

const char* lemma_kind_name(LemmaKind kind) {
    switch (kind) {
        case LemmaKind::matching_structure: return "matching-structure";
        case LemmaKind::minimum_matching: return "minimum-matching";
        case LemmaKind::perfect_matching_charact: return "perfect-matching-charact";
        case LemmaKind::all_singletons: return "all-singletons";
    }
    return "?";
}

namespace {

std::string normalized(std::string s) {
    for (char& ch : s)
        if (ch == '_') ch = '-';
    return s;
}

constexpr BoundKind kAllBounds[] = {
    BoundKind::gallai,         BoundKind::degree,
    BoundKind::main,           BoundKind::matching_lower,
    BoundKind::regular_half,   BoundKind::regular_two_thirds,
    BoundKind::regular_four,   BoundKind::addendum,
};
constexpr LemmaKind kAllLemmas[] = {
    LemmaKind::matching_structure,
    LemmaKind::minimum_matching,
    LemmaKind::perfect_matching_charact,
    LemmaKind::all_singletons,
};

} // namespace

std::optional<BoundKind> bound_kind_from_name(const std::string& name) {
    const std::string n = normalized(name);
    for (BoundKind k : kAllBounds)
        if (n == bound_kind_name(k)) return k;
    return std::nullopt;
}

std::optional<LemmaKind> lemma_kind_from_name(const std::string& name) {
    const std::string n = normalized(name);
    for (LemmaKind k : kAllLemmas)
        if (n == lemma_kind_name(k)) return k;
    return std::nullopt;
}

namespace {

void fill_rational_verdict(BoundReport& r, Rational lhs, std::string lhs_text, Rational rhs,
                           bool strict) {
    r.lhs = lhs;
    r.lhs_text = std::move(lhs_text);
    r.rhs = rhs;
    r.rhs_text = rhs.str();
    r.relation = strict ? ">" : ">=";
    r.holds = strict ? rhs < lhs : !(lhs < rhs);
    r.tight = lhs == rhs;
    r.computed = true;
}

void fill_surd_verdict(BoundReport& r, Rational lhs, std::string lhs_text, long long n) {
    r.lhs = lhs;
    r.lhs_text = std::move(lhs_text);
    r.rhs_is_surd = true;
    r.surd_t = n + 1;
    r.surd_s = n - 1;
    r.rhs_text = surd_bound_text(r.surd_t, r.surd_s);
    const SurdCheck sc = compare_to_surd_lower_bound(lhs, r.surd_t, r.surd_s);
    r.holds = sc.holds;
    r.tight = sc.tight;
    r.computed = true;
}

} // namespace

BoundReport check_bound(const Graph& g, BoundKind kind) {
    BoundReport r;
    r.kind = kind;
    const GraphStats st = graph_stats(g);
    const long long n = g.n();

    switch (kind) {
        case BoundKind::gallai: {
            if (n < 1) {
                r.reason = "empty graph";
                break;
            }
            r.applicable = true;
            const Clutter mis = maximal_independent_sets(g);
            int min_u = mis.edges.front().count();
            for (const Bitset& e : mis.edges) min_u = std::min(min_u, e.count());
            r.lhs = Rational(static_cast<long long>(min_u) + st.max_degree, 1);
            r.lhs_text = "min |U| + max degree";
            r.rhs = Rational(n, 1);
            r.rhs_text = std::to_string(n);
            r.relation = "<=";
            r.holds = !(r.rhs < r.lhs);
            r.tight = r.lhs == r.rhs;
            r.computed = true;
            break;
        }
        case BoundKind::degree: {
            if (g.m() < 1) {
                r.reason = "needs at least one edge";
                break;
            }
            r.applicable = true;
            fill_rational_verdict(r, graph_complexity(g).c, "c(G)",
                                  Rational(1, n - st.max_degree), false);
            break;
        }
        case BoundKind::main: {
            const bool exception = st.balanced_complete_bipartite && st.bipartite_side &&
                                   *st.bipartite_side >= 2 && *st.bipartite_side <= 4;
            if (!st.connected)
                r.reason = "not connected";
            else if (n < 2)
                r.reason = "needs at least two vertices";
            else if (exception)
                r.reason = "listed exception K_{" + std::to_string(*st.bipartite_side) + "," +
                           std::to_string(*st.bipartite_side) + "}";
            else
                r.applicable = true;
            // The comparison is still worth reporting for the listed exceptions.
            if (st.connected && n >= 2)
                fill_surd_verdict(r, graph_complexity(g).c, "c(G)", n);
            break;
        }
        case BoundKind::matching_lower: {
            if (!st.connected)
                r.reason = "not connected";
            else if (n <= 4)
                r.reason = "needs more than four vertices";
            else
                r.applicable = true;
            if (r.applicable)
                fill_rational_verdict(r, matching_complexity(g).report.c, "matching c(G)",
                                      Rational(2, n - 2), false);
            break;
        }
        case BoundKind::regular_half:
        case BoundKind::regular_two_thirds:
        case BoundKind::regular_four: {
            const int rd = st.regular_degree ? *st.regular_degree : -1;
            if (!st.connected)
                r.reason = "not connected";
            else if (!st.regular)
                r.reason = "not regular";
            else if (kind == BoundKind::regular_half && rd <= 1)
                r.reason = "needs degree above one";
            else if (kind == BoundKind::regular_two_thirds && rd <= 4)
                r.reason = "needs degree above four";
            else if (kind == BoundKind::regular_four && rd != 4)
                r.reason = "needs degree exactly four";
            else
                r.applicable = true;
            if (r.applicable) {
                const Rational mc = matching_complexity(g).report.c;
                if (kind == BoundKind::regular_half)
                    fill_rational_verdict(r, mc, "matching c(G)", Rational(1, 2), false);
                else if (kind == BoundKind::regular_two_thirds)
                    fill_rational_verdict(r, mc, "matching c(G)", Rational(2, 3), false);
                else
                    fill_rational_verdict(r, mc, "matching c(G)", Rational(3, 5), true);
            }
            break;
        }
        case BoundKind::addendum: {
            r.reason = "the addendum bound applies to clutters; pass one explicitly";
            break;
        }
    }
    return r;
}

BoundReport check_bound(const Clutter& l, BoundKind kind) {
    BoundReport r;
    r.kind = kind;
    if (kind != BoundKind::addendum) {
        r.reason = "only the addendum bound applies to clutter input";
        return r;
    }
    const long long n = l.ground;
    const long long k = static_cast<long long>(l.edges.size());
    if (k < 1) {
        r.reason = "clutter has no edges";
        return r;
    }
    Bitset covered(l.ground);
    Bitset common = Bitset::full(l.ground);
    for (const Bitset& e : l.edges) {
        covered |= e;
        common &= e;
    }
    if (n < 1)
        r.reason = "empty ground set";
    else if (!covered.contains(Bitset::full(l.ground)))
        r.reason = "edges do not cover the ground set";
    else if (common.any())
        r.reason = "edges share a common element";
    else if (n % k == 0)
        r.reason = "edge count " + std::to_string(k) + " divides the ground size " +
                   std::to_string(n);
    else
        r.applicable = true;
    // Informational even when k | n: that comparison is the whole point of the
    // divisibility example.
    if (n >= 1)
        fill_surd_verdict(r, clutter_complexity(l).c, "c(L)", n);
    return r;
}

namespace {

std::string edge_str(const std::pair<int, int>& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

LemmaReport lemma_matching_structure(const Graph& g) {
    LemmaReport rep;
    rep.kind = LemmaKind::matching_structure;
    if (g.m() < 1) {
        rep.premise_note = "needs at least one edge";
        return rep;
    }
    rep.premise_holds = true;
    rep.premise_note = "checked over every maximal matching";

    const MatchingClutter mm = maximal_matchings(g);
    const ComplexityReport cr = clutter_complexity(mm.clutter, &mm.line);
    LemmaConclusion inside{"off-recognized-vertices-see-only-recognized", true, ""};
    LemmaConclusion outside{"recognized-edges-reach-outside", true, ""};

    for (size_t h = 0; h < mm.clutter.edges.size(); ++h) {
        const Bitset& H = mm.clutter.edges[h];
        const Bitset& S = cr.per_edge[h].min_set;
        Bitset vs(g.n());
        for (int ei = S.first(); ei >= 0; ei = S.next(ei)) {
            vs.set(mm.edge_map[ei].first);
            vs.set(mm.edge_map[ei].second);
        }
        for (int ei = H.first(); ei >= 0; ei = H.next(ei)) {
            const auto [u, v] = mm.edge_map[ei];
            if (S.test(ei)) {
                Bitset nu = g.neighbors(u);
                nu.subtract(vs);
                Bitset nv = g.neighbors(v);
                nv.subtract(vs);
                if (!nu.any() && !nv.any() && outside.pass) {
                    outside.pass = false;
                    outside.witness = "matching #" + std::to_string(h) + ": recognized edge " +
                                      edge_str({u, v}) +
                                      " has no endpoint with a neighbour outside the "
                                      "recognized endpoints";
                }
            } else {
                for (int w : {u, v}) {
                    Bitset nb = g.neighbors(w);
                    nb.subtract(vs);
                    nb.reset(u);
                    nb.reset(v);
                    if (nb.any() && inside.pass) {
                        inside.pass = false;
                        inside.witness = "matching #" + std::to_string(h) + ": vertex " +
                                         std::to_string(w) + " of off-recognized edge " +
                                         edge_str({u, v}) + " is adjacent to " +
                                         std::to_string(nb.first()) +
                                         " outside the recognized endpoints";
                    }
                }
            }
        }
    }
    rep.conclusions = {inside, outside};
    return rep;
}

LemmaReport lemma_minimum_matching(const Graph& g) {
    LemmaReport rep;
    rep.kind = LemmaKind::minimum_matching;
    if (g.m() < 1) {
        rep.premise_note = "needs at least one edge";
        return rep;
    }
    rep.premise_holds = true;

    const MatchingClutter mm = maximal_matchings(g);
    const ComplexityReport cr = clutter_complexity(mm.clutter, &mm.line);
    int k_min = mm.clutter.edges.front().count();
    for (const Bitset& H : mm.clutter.edges) k_min = std::min(k_min, H.count());
    rep.premise_note = "checked over every maximal matching of minimum size " +
                       std::to_string(k_min);

    LemmaConclusion two{"no-two-sided-contact-with-off-recognized", true, ""};
    for (size_t h = 0; h < mm.clutter.edges.size(); ++h) {
        const Bitset& H = mm.clutter.edges[h];
        if (H.count() != k_min) continue;
        const Bitset& S = cr.per_edge[h].min_set;
        std::vector<int> rest;
        for (int ei = H.first(); ei >= 0; ei = H.next(ei))
            if (!S.test(ei)) rest.push_back(ei);

        for (int ei = H.first(); ei >= 0 && two.pass; ei = H.next(ei)) {
            const auto [u, v] = mm.edge_map[ei];
            std::vector<int> ru, rv;
            for (int f : rest) {
                const auto [a, b] = mm.edge_map[f];
                if (g.adjacent(u, a) || g.adjacent(u, b)) ru.push_back(f);
                if (g.adjacent(v, a) || g.adjacent(v, b)) rv.push_back(f);
            }
            const bool ok = ru.empty() || rv.empty() ||
                            (ru.size() == 1 && rv.size() == 1 && ru[0] == rv[0]);
            if (!ok) {
                int f1 = ru[0], f2 = rv[0];
                if (f1 == f2) {
                    if (ru.size() > 1)
                        f1 = ru[1];
                    else
                        f2 = rv[1];
                }
                two.pass = false;
                two.witness = "minimum matching #" + std::to_string(h) + ": edge " +
                              edge_str({u, v}) + " contacts off-recognized edges " +
                              edge_str(mm.edge_map[f1]) + " and " + edge_str(mm.edge_map[f2]) +
                              " from its two endpoints";
            }
        }
    }
    rep.conclusions = {two};
    return rep;
}

LemmaReport lemma_perfect_matching_charact(const Graph& g) {
    LemmaReport rep;
    rep.kind = LemmaKind::perfect_matching_charact;
    const GraphStats st = graph_stats(g);

    bool every_perfect = false;
    if (g.m() >= 1) {
        const MatchingClutter mm = maximal_matchings(g);
        every_perfect = true;
        for (const Bitset& H : mm.clutter.edges)
            if (2 * static_cast<int>(H.count()) != g.n()) {
                every_perfect = false;
                break;
            }
    }
    const bool premise = st.connected && every_perfect;
    const bool shape = (st.complete && g.n() >= 2 && g.n() % 2 == 0) ||
                       st.balanced_complete_bipartite;
    rep.premise_holds = premise;
    rep.premise_note = premise ? "connected and every maximal matching is perfect"
                       : !st.connected ? "not connected"
                                       : "some maximal matching is not perfect";
    rep.conclusions = {
        {"perfect-forces-shape", !premise || shape,
         !premise || shape ? ""
                           : "every maximal matching is perfect but the graph is neither "
                             "complete of even order nor balanced complete bipartite"},
        {"shape-forces-perfect", !shape || premise,
         !shape || premise ? ""
                           : "the graph is complete of even order or balanced complete "
                             "bipartite but some maximal matching is not perfect"},
    };
    return rep;
}

LemmaReport lemma_all_singletons(const Graph& g) {
    LemmaReport rep;
    rep.kind = LemmaKind::all_singletons;
    const GraphStats st = graph_stats(g);
    if (!st.connected) {
        rep.premise_note = "not connected";
        return rep;
    }
    const Clutter mis = maximal_independent_sets(g);
    const ComplexityReport cr = clutter_complexity(mis, &g);
    for (const EdgeComplexity& e : cr.per_edge)
        if (e.min_set.count() != 1) {
            rep.premise_note = "maximal independent set #" + std::to_string(e.edge_index) +
                               " has minimum recognizing size " +
                               std::to_string(e.min_set.count());
            return rep;
        }
    rep.premise_holds = true;
    rep.premise_note = "connected; every maximal independent set has a singleton minimum "
                       "recognizing set";
    const int l = static_cast<int>(mis.edges.size());

    LemmaConclusion dom{"singleton-dominates-outside", true, ""};
    for (int i = 0; i < l; ++i) {
        const int x = cr.per_edge[i].min_set.first();
        Bitset outside = mis.edges[i].complement();
        outside.subtract(g.neighbors(x));
        if (outside.any()) {
            dom.pass = false;
            dom.witness = "set #" + std::to_string(i) + ": recognizer " + std::to_string(x) +
                          " is not adjacent to outside vertex " +
                          std::to_string(outside.first());
            break;
        }
    }

    int min_u = mis.edges.front().count();
    for (const Bitset& e : mis.edges) min_u = std::min(min_u, e.count());
    const bool gallai_eq = min_u + st.max_degree == g.n();
    LemmaConclusion gal{"minimum-set-plus-degree-equality", gallai_eq,
                        gallai_eq ? ""
                                  : "min |U| " + std::to_string(min_u) + " + max degree " +
                                        std::to_string(st.max_degree) + " != " +
                                        std::to_string(g.n())};

    // Unique-membership classes and the two clique directions.
    std::vector<int> owner(g.n(), -2);
    for (int i = 0; i < l; ++i)
        for (int v = mis.edges[i].first(); v >= 0; v = mis.edges[i].next(v))
            owner[v] = owner[v] == -2 ? i : -1;
    rep.unique_membership.assign(l, {});
    for (int v = 0; v < g.n(); ++v)
        if (owner[v] >= 0) rep.unique_membership[owner[v]].push_back(v);

    LemmaConclusion nonempty{"unique-membership-classes-nonempty", true, ""};
    for (int i = 0; i < l && nonempty.pass; ++i)
        if (rep.unique_membership[i].empty()) {
            nonempty.pass = false;
            nonempty.witness = "set #" + std::to_string(i) + " has no vertex of its own";
        }

    LemmaConclusion cross{"class-transversals-are-cliques", true, ""};
    for (int i = 0; i < l && cross.pass; ++i)
        for (int j = i + 1; j < l && cross.pass; ++j)
            for (int u : rep.unique_membership[i]) {
                for (int v : rep.unique_membership[j])
                    if (!g.adjacent(u, v)) {
                        cross.pass = false;
                        cross.witness = "vertices " + std::to_string(u) + " (set #" +
                                        std::to_string(i) + ") and " + std::to_string(v) +
                                        " (set #" + std::to_string(j) + ") are not adjacent";
                        break;
                    }
                if (!cross.pass) break;
            }

    std::vector<std::pair<int, int>> cedges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) cedges.emplace_back(u, v);
    const Clutter cliques = maximal_independent_sets(Graph::from_edges(g.n(), std::move(cedges)));
    int omega = 0;
    for (const Bitset& q : cliques.edges) omega = std::max(omega, q.count());
    rep.max_clique_size = omega;

    LemmaConclusion sizes{"transversal-size-is-maximum-clique-size", l == omega, ""};
    if (!sizes.pass)
        sizes.witness = "class transversals give cliques of size " + std::to_string(l) +
                        " but the maximum clique has " + std::to_string(omega) + " vertices";

    LemmaConclusion back{"maximum-cliques-are-class-transversals", true, ""};
    for (const Bitset& q : cliques.edges) {
        if (q.count() != omega || !back.pass) continue;
        std::vector<char> seen(l, 0);
        for (int v = q.first(); v >= 0 && back.pass; v = q.next(v)) {
            if (owner[v] < 0) {
                back.pass = false;
                back.witness = "maximum clique vertex " + std::to_string(v) +
                               " belongs to several maximal independent sets";
            } else if (seen[owner[v]]) {
                back.pass = false;
                back.witness = "maximum clique has two vertices from set #" +
                               std::to_string(owner[v]);
            } else {
                seen[owner[v]] = 1;
            }
        }
        if (back.pass && q.count() != l) {
            back.pass = false;
            back.witness = "maximum clique picks only " + std::to_string(q.count()) + " of " +
                           std::to_string(l) + " classes";
        }
    }

    const int diam = st.diameter.value_or(0);
    LemmaConclusion dia{"diameter-at-most-three", diam <= 3,
                        diam <= 3 ? "" : "diameter is " + std::to_string(diam)};

    rep.conclusions = {dom, gal, nonempty, cross, sizes, back, dia};
    return rep;
}

} // namespace

LemmaReport check_lemma(const Graph& g, LemmaKind kind) {
    switch (kind) {
        case LemmaKind::matching_structure: return lemma_matching_structure(g);
        case LemmaKind::minimum_matching: return lemma_minimum_matching(g);
        case LemmaKind::perfect_matching_charact: return lemma_perfect_matching_charact(g);
        case LemmaKind::all_singletons: return lemma_all_singletons(g);
    }
    throw Error("unknown lemma kind");
}

FullReport full_report(const Graph& g) {
    FullReport rep;
    rep.stats = graph_stats(g);
    try {
        rep.independent = graph_complexity(g);
    } catch (const BudgetError& e) {
        throw BudgetError(std::string("independent-set complexity: ") + e.what());
    }
    if (g.m() >= 1) {
        try {
            rep.matching = matching_complexity(g);
            rep.has_matching = true;
        } catch (const BudgetError& e) {
            throw BudgetError(std::string("matching complexity: ") + e.what());
        }
    }
    for (BoundKind k : kAllBounds) {
        if (k == BoundKind::addendum) continue;
        try {
            rep.bounds.push_back(check_bound(g, k));
        } catch (const BudgetError& e) {
            throw BudgetError(std::string("bound ") + bound_kind_name(k) + ": " + e.what());
        }
    }
    for (LemmaKind k : kAllLemmas) {
        try {
            rep.lemmas.push_back(check_lemma(g, k));
        } catch (const BudgetError& e) {
            throw BudgetError(std::string("lemma ") + lemma_kind_name(k) + ": " + e.what());
        }
    }
    return rep;
}

} // namespace clut
