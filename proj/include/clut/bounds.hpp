#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clut/clutter.hpp"
#include "clut/graph.hpp"
#include "clut/rational.hpp"

namespace clut {

enum class BoundKind {
    gallai,             // min |U| + max degree <= |V|
    degree,             // c(G) >= 1/(|V| - max degree), needs an edge
    main,               // c(G) >= 1/(1 + |V| - 2*sqrt(|V|-1)); three listed exceptions
    matching_lower,     // matching c >= 2/(|V|-2); connected, |V| > 4
    regular_half,       // matching c >= 1/2; connected r-regular, r > 1
    regular_two_thirds, // matching c >= 2/3; connected r-regular, r > 4
    regular_four,       // matching c > 3/5; connected 4-regular
    addendum,           // clutter form of the surd bound; k edges, k does not divide n
};

const char* bound_kind_name(BoundKind kind);
std::optional<BoundKind> bound_kind_from_name(const std::string& name);

// Verdict for one bound on one input.  Inapplicable inputs are a first-class
// result (applicable = false with the reason), never an error and never a
// silent "holds".  For the listed exceptions of the main bound the comparison
// is still computed informationally.  All verdicts are exact: rational
// cross-multiplication, or the integer squaring scheme for surd bounds.
struct BoundReport {
    BoundKind kind = BoundKind::gallai;
    bool applicable = false;
    std::string reason;     // why inapplicable; empty otherwise
    bool computed = false;  // lhs/holds/tight filled
    std::string lhs_text;
    Rational lhs;
    std::string rhs_text;
    Rational rhs;           // meaningful when !rhs_is_surd
    bool rhs_is_surd = false;
    long long surd_t = 0;   // bound is 1/(surd_t - 2*sqrt(surd_s))
    long long surd_s = 0;
    std::string relation = ">=";
    bool holds = false;
    bool tight = false;     // exact equality
};

BoundReport check_bound(const Graph& g, BoundKind kind);

// Clutter overload: only the addendum kind applies; every other kind reports
// inapplicable.  Hypotheses: union of edges = ground set, empty intersection,
// and the edge count k does not divide the ground size.
BoundReport check_bound(const Clutter& l, BoundKind kind);

enum class LemmaKind {
    matching_structure,      // every maximal matching: off-recognized vertices see
                             // only recognized ones; recognized edges reach outside
    minimum_matching,        // minimum maximal matchings: no edge contacts two
                             // different off-recognized edges from both endpoints
    perfect_matching_charact,// every maximal matching perfect <=> complete of even
                             // order or balanced complete bipartite
    all_singletons,          // premise: connected and every maximal independent set
                             // has a singleton minimum recognizing set
};

const char* lemma_kind_name(LemmaKind kind);
std::optional<LemmaKind> lemma_kind_from_name(const std::string& name);

struct LemmaConclusion {
    std::string name;
    bool pass = true;
    std::string witness; // concrete failing structure, empty when pass
};

struct LemmaReport {
    LemmaKind kind = LemmaKind::matching_structure;
    bool premise_holds = false;
    std::string premise_note;
    std::vector<LemmaConclusion> conclusions;

    // all_singletons extras: the unique-membership class of each maximal
    // independent set, and the exact maximum clique size.
    std::vector<std::vector<int>> unique_membership;
    int max_clique_size = 0;

    bool holds() const {
        for (const LemmaConclusion& c : conclusions)
            if (!c.pass) return false;
        return true;
    }
};

LemmaReport check_lemma(const Graph& g, LemmaKind kind);

// Everything at once: stats, both complexities, all graph bounds, all lemmas.
// BudgetError from a stage is rethrown with the stage named.
struct FullReport {
    GraphStats stats;
    ComplexityReport independent;
    bool has_matching = false;
    MatchingReport matching;
    std::vector<BoundReport> bounds;
    std::vector<LemmaReport> lemmas;
};

FullReport full_report(const Graph& g);

} // namespace clut
