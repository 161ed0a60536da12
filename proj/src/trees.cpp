#include "clut/trees.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "clut/errors.hpp"

namespace clut {

namespace {

void require_tree(const Graph& t) {
    if (t.n() < 1) throw InputError("a tree has at least one vertex");
    if (t.m() != t.n() - 1 || !is_connected(t))
        throw InputError("graph is not a tree (need connectivity and exactly n-1 edges)");
}

std::vector<int> neighbors_of(const Graph& g, int v) {
    return g.neighbors(v).to_vector();
}

} // namespace

bool TreeLabeling::has_beta() const {
    return std::find(beta.begin(), beta.end(), char(1)) != beta.end();
}

bool TreeLabeling::has_pure_delta() const {
    for (size_t v = 0; v < delta.size(); ++v)
        if (delta[v] && !beta[v]) return true;
    return false;
}

TreeLabeling label_tree(const Graph& t) {
    require_tree(t);
    const int n = t.n();
    TreeLabeling lab;
    lab.alpha.assign(n, 0);
    lab.beta.assign(n, 0);
    lab.gamma.assign(n, 0);
    lab.delta.assign(n, 0);
    lab.beta_step.assign(n, 0);
    lab.gamma_step.assign(n, 0);

    // alpha: distance exactly two from some leaf.  In a tree the distance-2
    // neighbourhood of a leaf l with support q is N(q) \ {l}.
    for (int l = 0; l < n; ++l) {
        if (t.degree(l) != 1) continue;
        int q = t.neighbors(l).first();
        for (int v : neighbors_of(t, q))
            if (v != l) lab.alpha[v] = 1;
    }

    // beta/gamma fixed point.  A round marks every vertex that currently
    // qualifies as beta, then marks the neighbours of the new beta vertices
    // as gamma; gamma labels feed the next round's beta rule.
    for (int round = 1;; ++round) {
        std::vector<int> fresh;
        for (int v = 0; v < n; ++v) {
            if (lab.beta[v]) continue;
            bool qualifies = false;
            for (int w : neighbors_of(t, v)) {
                if (!lab.alpha[w]) continue;
                bool all = true;
                for (int s : neighbors_of(t, w)) {
                    if (s == v) continue;
                    if (!lab.alpha[s] && !lab.gamma[s]) {
                        all = false;
                        break;
                    }
                }
                if (all) {
                    qualifies = true;
                    break;
                }
            }
            if (qualifies) fresh.push_back(v);
        }
        if (fresh.empty()) {
            lab.rounds = round - 1;
            break;
        }
        for (int v : fresh) {
            lab.beta[v] = 1;
            lab.beta_step[v] = round;
        }
        for (int v : fresh) {
            for (int w : neighbors_of(t, v)) {
                if (!lab.gamma[w]) {
                    lab.gamma[w] = 1;
                    lab.gamma_step[w] = round;
                }
            }
        }
    }

    for (int v = 0; v < n; ++v) {
        bool all = true;
        for (int w : neighbors_of(t, v)) {
            if (!lab.alpha[w] && !lab.gamma[w]) {
                all = false;
                break;
            }
        }
        lab.delta[v] = all ? 1 : 0;
    }
    return lab;
}

AdmissibilityCheck check_admissible_labels(const Graph& t, const TreeLabeling& lab,
                                           const Bitset& u) {
    require_tree(t);
    if (u.universe() != t.n()) throw InputError("set universe does not match the tree order");
    AdmissibilityCheck res;
    for (int v = 0; v < t.n(); ++v) {
        if (lab.alpha[v] && u.test(v)) res.alpha_in_u.push_back(v);
        if (lab.beta[v] && !u.test(v)) res.beta_missing.push_back(v);
        if (lab.gamma[v] && u.test(v)) res.gamma_in_u.push_back(v);
        if (lab.delta[v] && !u.test(v)) res.delta_missing.push_back(v);
    }
    return res;
}

NecessaryCheck check_necessary_condition(const Graph& t, const TreeLabeling& lab) {
    require_tree(t);
    NecessaryCheck res;
    for (int v = 0; v < t.n(); ++v) {
        if ((lab.alpha[v] || lab.gamma[v]) && (lab.beta[v] || lab.delta[v]))
            res.overlap_violations.push_back(v);
    }
    for (int v = 0; v < t.n(); ++v) {
        if (!lab.delta[v]) continue;
        bool found = false;
        for (int s : neighbors_of(t, v)) {
            if (!lab.alpha[s] && !lab.gamma[s]) continue;
            bool clean = true;
            for (int r : neighbors_of(t, s)) {
                if (r == v) continue;
                if (lab.beta[r] || lab.delta[r]) {
                    clean = false;
                    break;
                }
            }
            if (clean) {
                found = true;
                break;
            }
        }
        if (!found) res.witness_violations.push_back(v);
    }
    return res;
}

bool verify_specific_certificate(const Graph& t, const Bitset& u, const Bitset& spec,
                                 std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (u.universe() != t.n() || spec.universe() != t.n())
        return fail("set universe does not match the graph order");
    for (int v = u.first(); v >= 0; v = u.next(v)) {
        Bitset nb = t.neighbors(v);
        nb &= u;
        if (nb.any())
            return fail("not independent: vertices " + std::to_string(v) + " and " +
                        std::to_string(nb.first()) + " are both in the set");
    }
    for (int v = 0; v < t.n(); ++v) {
        if (u.test(v)) continue;
        Bitset nb = t.neighbors(v);
        if (!nb.intersects(u))
            return fail("not maximal: vertex " + std::to_string(v) + " has no neighbour in the set");
    }
    for (int v = u.first(); v >= 0; v = u.next(v)) {
        bool witnessed = false;
        for (int s : neighbors_of(t, v)) {
            if (!spec.test(s)) continue;
            Bitset nb = t.neighbors(s);
            nb &= u;
            if (nb.count() == 1) { // that single vertex is necessarily v
                witnessed = true;
                break;
            }
        }
        if (!witnessed)
            return fail("vertex " + std::to_string(v) +
                        " has no designated neighbour adjacent to it alone");
    }
    return true;
}

FullComplexityMis construct_full_complexity_mis(const Graph& t, int leaf) {
    require_tree(t);
    const int n = t.n();
    if (leaf < 0 || leaf >= n) throw InputError("leaf index out of range");
    if (n == 1) {
        // Single vertex: it is trivially a maximal independent set recognized
        // by the empty set, and the complexity-one convention does not apply;
        // treat as the degenerate full set.
        FullComplexityMis res;
        res.u = Bitset::of(1, {0});
        res.spec = Bitset(1);
        return res;
    }
    if (t.degree(leaf) != 1)
        throw InputError("vertex " + std::to_string(leaf) + " is not a leaf");

    TreeLabeling lab = label_tree(t);
    if (lab.has_beta() || lab.has_pure_delta())
        throw InputError(
            "construction requires a tree with no beta vertex and no pure delta vertex");

    // Root the tree at the chosen leaf.
    std::vector<int> parent(n, -1);
    std::vector<std::vector<int>> children(n);
    {
        std::vector<char> seen(n, 0);
        std::deque<int> bfs{leaf};
        seen[leaf] = 1;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop_front();
            for (int w : neighbors_of(t, v)) {
                if (seen[w]) continue;
                seen[w] = 1;
                parent[w] = v;
                children[v].push_back(w); // ascending: neighbors_of is sorted
                bfs.push_back(w);
            }
        }
    }

    Bitset u(n), spec(n);
    ConstructionTrace trace;
    std::deque<int> queue;           // anchors; the popped group is children(anchor)
    std::vector<char> enqueued(n, 0);
    auto push_anchor = [&](int x) {
        if (!children[x].empty() && !enqueued[x]) {
            enqueued[x] = 1;
            queue.push_back(x);
        }
    };

    int p = t.neighbors(leaf).first();
    u.set(leaf);
    spec.set(p);
    for (int g : children[p]) push_anchor(g);

    while (!queue.empty()) {
        int g = queue.front();
        queue.pop_front();
        const std::vector<int>& grp = children[g];

        ConstructionTrace::Event ev;
        ev.anchor = g;
        ev.group = grp;

        std::vector<int> a;
        for (int v : grp)
            if (!lab.alpha[v]) a.push_back(v);

        if (a.empty()) {
            // Every child is alpha: the anchor itself joins U and all its
            // children become designated witnesses; descend past them.
            ev.outcome = ConstructionTrace::Outcome::promoted_anchor;
            u.set(g);
            ev.added_u.push_back(g);
            for (int b : grp) {
                spec.set(b);
                ev.added_spec.push_back(b);
                for (int d : children[b]) push_anchor(d);
            }
        } else {
            std::vector<int> shielded; // non-alpha children whose children are all alpha
            for (int v : a) {
                if (children[v].empty()) continue;
                bool all = true;
                for (int c : children[v])
                    if (!lab.alpha[c]) {
                        all = false;
                        break;
                    }
                if (all) shielded.push_back(v);
            }
            if (!shielded.empty()) {
                ev.outcome = ConstructionTrace::Outcome::picked_shielded;
                for (int z : shielded) {
                    u.set(z);
                    ev.added_u.push_back(z);
                    for (int c : children[z]) {
                        spec.set(c);
                        ev.added_spec.push_back(c);
                        for (int gc : children[c]) push_anchor(gc);
                    }
                }
                for (int x : grp) {
                    if (std::find(shielded.begin(), shielded.end(), x) == shielded.end())
                        push_anchor(x);
                }
            } else {
                int w = a.front(); // children are in ascending order
                ev.outcome = ConstructionTrace::Outcome::picked_single;
                u.set(w);
                ev.added_u.push_back(w);
                spec.set(g);
                ev.added_spec.push_back(g);
                for (int y : grp)
                    if (y != w) push_anchor(y);
                for (int c : children[w])
                    for (int z : children[c]) push_anchor(z);
            }
        }
        trace.events.push_back(std::move(ev));
    }

    std::string why;
    if (!verify_specific_certificate(t, u, spec, &why))
        throw Error("constructed set failed its certificate: " + why);

    FullComplexityMis res;
    res.u = std::move(u);
    res.spec = std::move(spec);
    res.trace = std::move(trace);
    return res;
}

} // namespace clut
