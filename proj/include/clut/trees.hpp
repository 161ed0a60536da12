#pragma once

#include <string>
#include <vector>

#include "clut/bitset.hpp"
#include "clut/graph.hpp"

namespace clut {

// Vertex labels for the tree complexity analysis.
//
//   alpha: some leaf lies at distance exactly two;
//   beta:  adjacent to an alpha vertex all of whose other neighbours are
//          alpha or gamma (computed as a staged fixed point — in the first
//          round no gamma labels exist yet);
//   gamma: adjacent to a beta vertex;
//   delta: every neighbour is alpha or gamma.
//
// A delta vertex that is not also beta is called "pure delta".  beta_step /
// gamma_step record the round (1-based) in which the label appeared; 0 means
// the label was never assigned.
struct TreeLabeling {
    std::vector<char> alpha, beta, gamma, delta;
    std::vector<int> beta_step, gamma_step;
    int rounds = 0;

    bool pure_delta(int v) const { return delta[v] && !beta[v]; }
    bool has_beta() const;
    bool has_pure_delta() const;
};

// InputError unless t is a tree (connected, m = n-1, n >= 1).
TreeLabeling label_tree(const Graph& t);

// Conditions every maximal independent set U with c(U) = 1 must satisfy:
// (1) no alpha vertex in U, (2) every beta vertex in U, (3) no gamma vertex
// in U, (4) every delta vertex in U.  Returns the violating vertices per
// condition (all empty iff U is admissible).
struct AdmissibilityCheck {
    std::vector<int> alpha_in_u, beta_missing, gamma_in_u, delta_missing;
    bool ok() const {
        return alpha_in_u.empty() && beta_missing.empty() && gamma_in_u.empty() &&
               delta_missing.empty();
    }
};
AdmissibilityCheck check_admissible_labels(const Graph& t, const TreeLabeling& lab,
                                           const Bitset& u);

// Structural conditions a tree must satisfy to have complexity one:
// (a) no alpha-or-gamma vertex is also beta-or-delta;
// (b) every delta vertex t has a neighbour (necessarily alpha or gamma)
//     none of whose other neighbours is beta or delta.
struct NecessaryCheck {
    std::vector<int> overlap_violations;  // vertices violating (a)
    std::vector<int> witness_violations;  // delta vertices violating (b)
    bool holds() const { return overlap_violations.empty() && witness_violations.empty(); }
};
NecessaryCheck check_necessary_condition(const Graph& t, const TreeLabeling& lab);

// True iff every vertex of u has a neighbour in spec that is adjacent to no
// other vertex of u, and u is a maximal independent set.  Such a witness
// forces every vertex of u into every recognizing set, so c(u) = 1.
bool verify_specific_certificate(const Graph& t, const Bitset& u, const Bitset& spec,
                                 std::string* why = nullptr);

// Trace of the rooted construction below, for diagnostics and reporting.
struct ConstructionTrace {
    enum class Outcome {
        promoted_anchor,     // every child was alpha: the anchor joins U
        picked_shielded,     // children that have only alpha children join U
        picked_single,       // the smallest non-alpha child joins U
    };
    struct Event {
        int anchor = -1;
        std::vector<int> group; // children of the anchor at pop time
        Outcome outcome;
        std::vector<int> added_u;
        std::vector<int> added_spec;
    };
    std::vector<Event> events;
};

// Builds a maximal independent set U containing the given leaf with
// c(U) = 1, for trees with no beta vertex and no pure delta vertex
// (InputError otherwise).  The certificate is re-verified before returning;
// failure raises Error.
struct FullComplexityMis {
    Bitset u;
    Bitset spec;
    ConstructionTrace trace;
};
FullComplexityMis construct_full_complexity_mis(const Graph& t, int leaf);

} // namespace clut
