#include "clut/reductions.hpp"

#include <bit>
#include <string>
#include <utility>
#include <vector>

#include "clut/clutter.hpp"
#include "clut/errors.hpp"

namespace clut {

namespace {

void require_covering_instance(const SetCoverInstance& inst) {
    if (inst.universe < 1)
        throw InputError("set-cover instance needs at least one element");
    if (inst.sets.empty())
        throw InputError("set-cover instance needs at least one set");
    Bitset covered(inst.universe);
    for (size_t j = 0; j < inst.sets.size(); ++j) {
        if (inst.sets[j].universe() != inst.universe)
            throw InputError("set " + std::to_string(j) + " is over a ground set of size " +
                             std::to_string(inst.sets[j].universe()) + ", expected " +
                             std::to_string(inst.universe));
        covered |= inst.sets[j];
    }
    if (!covered.contains(Bitset::full(inst.universe)))
        throw InputError(
            "the sets do not cover the universe; "
            "the set side of the gadget would not be maximal");
}

ReductionOutput build_gadget(const SetCoverInstance& inst, int multiplicity) {
    require_covering_instance(inst);
    if (multiplicity < 1)
        throw InputError("multiplicity must be at least 1");
    const int n = inst.universe;
    const int m = static_cast<int>(inst.sets.size());
    const long long total = static_cast<long long>(n) * multiplicity + m;
    if (total > Graph::vertex_cap())
        throw InputError("gadget needs " + std::to_string(total) +
                         " vertices, above the vertex cap of " +
                         std::to_string(Graph::vertex_cap()));

    const int nv = static_cast<int>(total);
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < m; ++j) {
        const int setv = n * multiplicity + j;
        for (int i = inst.sets[j].first(); i >= 0; i = inst.sets[j].next(i))
            for (int k = 0; k < multiplicity; ++k)
                edges.emplace_back(i * multiplicity + k, setv);
    }

    ReductionOutput out;
    out.graph = Graph::from_edges(nv, std::move(edges));
    out.distinguished_mis = Bitset(nv);
    out.roles.assign(nv, VertexRole::element);
    out.role_index.assign(nv, -1);
    out.copy_index.assign(nv, -1);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < multiplicity; ++k) {
            out.role_index[i * multiplicity + k] = i;
            out.copy_index[i * multiplicity + k] = k;
        }
    for (int j = 0; j < m; ++j) {
        const int setv = n * multiplicity + j;
        out.distinguished_mis.set(setv);
        out.roles[setv] = VertexRole::set_vertex;
        out.role_index[setv] = j;
    }
    out.universe = n;
    out.nsets = m;
    out.multiplicity = multiplicity;
    return out;
}

} // namespace

ReductionOutput build_problem1_graph(const SetCoverInstance& inst) {
    return build_gadget(inst, 1);
}

ReductionOutput build_problem2_graph(const SetCoverInstance& inst, int multiplicity) {
    if (multiplicity < 0)
        throw InputError("multiplicity must be positive");
    if (multiplicity == 0) {
        const long long nm = inst.universe + static_cast<long long>(inst.sets.size());
        if (nm * nm > Graph::vertex_cap())
            throw InputError("default multiplicity (" + std::to_string(nm) + "+" +
                             ")^2 = " + std::to_string(nm * nm) +
                             " already exceeds the vertex cap");
        multiplicity = static_cast<int>(nm * nm);
    }
    return build_gadget(inst, multiplicity);
}

ReductionReport verify_reduction(const SetCoverInstance& inst, ReductionKind which,
                                 int multiplicity) {
    const int m = static_cast<int>(inst.sets.size());
    if (m > 16)
        throw InputError("exhaustive reduction verification is limited to 16 sets "
                         "(instance has " + std::to_string(m) + ")");

    ReductionOutput gadget = which == ReductionKind::problem1
                                 ? build_problem1_graph(inst)
                                 : build_problem2_graph(inst, multiplicity);

    ReductionReport rep;
    rep.kind = which;
    rep.universe = gadget.universe;
    rep.nsets = m;
    rep.multiplicity = gadget.multiplicity;

    SetCoverResult sol = min_set_cover(inst);
    rep.l_min = static_cast<int>(sol.chosen.size());
    rep.expected = Rational(rep.l_min, m);

    // Covers of every size, by brute force over all subfamilies.
    rep.cover_exists.assign(m + 1, 0);
    const Bitset everything = Bitset::full(inst.universe);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        Bitset covered(inst.universe);
        for (int j = 0; j < m; ++j)
            if (mask & (1u << j)) covered |= inst.sets[j];
        if (covered.contains(everything))
            rep.cover_exists[std::popcount(mask)] = 1;
    }
    int brute_cover_min = -1;
    for (int l = 0; l <= m && brute_cover_min < 0; ++l)
        if (rep.cover_exists[l]) brute_cover_min = l;
    if (brute_cover_min != rep.l_min)
        rep.failures.push_back("solver cover optimum " + std::to_string(rep.l_min) +
                               " disagrees with brute force " +
                               std::to_string(brute_cover_min));

    Clutter mis = maximal_independent_sets(gadget.graph);
    int dist = -1;
    for (size_t i = 0; i < mis.edges.size(); ++i)
        if (mis.edges[i] == gadget.distinguished_mis) {
            dist = static_cast<int>(i);
            break;
        }
    if (dist < 0) {
        rep.failures.push_back("distinguished side is not among the maximal independent sets");
        rep.ok = false;
        return rep;
    }

    // Recognizing subsets of every size, by the containment definition.
    rep.recognizing_exists.assign(m + 1, 0);
    const int base = gadget.universe * gadget.multiplicity;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        Bitset d(gadget.graph.n());
        for (int j = 0; j < m; ++j)
            if (mask & (1u << j)) d.set(base + j);
        bool recognizing = true;
        for (size_t i = 0; i < mis.edges.size() && recognizing; ++i)
            if (static_cast<int>(i) != dist && mis.edges[i].contains(d))
                recognizing = false;
        if (recognizing) rep.recognizing_exists[std::popcount(mask)] = 1;
    }
    for (int l = 0; l <= m; ++l)
        if (rep.cover_exists[l] != rep.recognizing_exists[l])
            rep.failures.push_back(
                "size-" + std::to_string(l) + " equivalence fails: cover " +
                (rep.cover_exists[l] ? "exists" : "missing") + ", recognizing subset " +
                (rep.recognizing_exists[l] ? "exists" : "missing"));
    int brute_recog_min = -1;
    for (int l = 0; l <= m && brute_recog_min < 0; ++l)
        if (rep.recognizing_exists[l]) brute_recog_min = l;

    // Production solver over the whole gadget clutter (domination route).
    ComplexityReport cr = clutter_complexity(mis, &gadget.graph);
    rep.whole_complexity = cr.c;
    const EdgeComplexity& de = cr.per_edge[dist];
    rep.distinguished_min_recognizing = de.min_set.count();
    rep.distinguished_complexity = de.c;
    if (rep.distinguished_min_recognizing != brute_recog_min)
        rep.failures.push_back("solver recognizing minimum " +
                               std::to_string(rep.distinguished_min_recognizing) +
                               " disagrees with containment brute force " +
                               std::to_string(brute_recog_min));
    if (rep.distinguished_min_recognizing != rep.l_min)
        rep.failures.push_back("minimum recognizing size " +
                               std::to_string(rep.distinguished_min_recognizing) +
                               " differs from l_min " + std::to_string(rep.l_min));

    rep.has_other = cr.per_edge.size() > 1;
    bool first = true;
    for (const EdgeComplexity& e : cr.per_edge) {
        if (e.edge_index == dist) continue;
        if (first || rep.worst_other < e.c) rep.worst_other = e.c;
        first = false;
    }

    if (which == ReductionKind::problem2) {
        if (!(rep.whole_complexity == rep.expected))
            rep.failures.push_back("gadget complexity " + rep.whole_complexity.str() +
                                   ", expected l_min/m = " + rep.expected.str());
        if (rep.has_other && !(rep.worst_other < Rational(1, m)))
            rep.failures.push_back("a non-distinguished maximal independent set has complexity " +
                                   rep.worst_other.str() + " >= 1/" + std::to_string(m));
    }

    rep.ok = rep.failures.empty();
    return rep;
}

} // namespace clut
