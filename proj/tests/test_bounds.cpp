#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "clut/bounds.hpp"
#include "clut/clutter.hpp"
#include "clut/errors.hpp"
#include "clut/graph.hpp"
#include "clut/rational.hpp"

using namespace clut;

namespace {

Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, e);
}

Graph octahedron() {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (v != u + 3 || u >= 3) e.emplace_back(u, v);
    // Complement of a perfect matching: u and u+3 stay non-adjacent.
    return Graph::from_edges(6, e);
}

} // namespace

TEST_CASE("octahedron helper really is the 4-regular 6-vertex graph") {
    const Graph g = octahedron();
    const GraphStats st = graph_stats(g);
    CHECK(st.regular);
    CHECK(st.regular_degree == 4);
    CHECK(st.connected);
    CHECK(g.m() == 12);
}

TEST_CASE("minimum independent set plus maximum degree never exceeds the order") {
    const BoundReport k4 = check_bound(Graph::complete(4), BoundKind::gallai);
    CHECK(k4.applicable);
    CHECK(k4.holds);
    CHECK(k4.tight);  // 1 + 3 == 4
    CHECK(k4.relation == "<=");

    const BoundReport star = check_bound(Graph::star(4), BoundKind::gallai);
    CHECK(star.holds);
    CHECK(star.tight);  // 1 + 4 == 5

    const BoundReport empty3 = check_bound(Graph::edgeless(3), BoundKind::gallai);
    CHECK(empty3.holds);
    CHECK(empty3.tight);  // 3 + 0 == 3

    const BoundReport c5 = check_bound(Graph::cycle(5), BoundKind::gallai);
    CHECK(c5.holds);
    CHECK_FALSE(c5.tight);  // 2 + 2 < 5

    const BoundReport k1 = check_bound(Graph::edgeless(1), BoundKind::gallai);
    CHECK(k1.holds);
    CHECK(k1.tight);
}

TEST_CASE("degree lower bound") {
    const BoundReport k4 = check_bound(Graph::complete(4), BoundKind::degree);
    CHECK(k4.applicable);
    CHECK(k4.holds);
    CHECK(k4.tight);  // 1 >= 1/(4-3)
    CHECK(k4.rhs == Rational(1, 1));

    const BoundReport star = check_bound(Graph::star(4), BoundKind::degree);
    CHECK(star.holds);
    CHECK(star.tight);  // 1 >= 1/(5-4)

    const BoundReport c6 = check_bound(Graph::cycle(6), BoundKind::degree);
    CHECK(c6.holds);
    CHECK_FALSE(c6.tight);  // 1 >= 1/4
    CHECK(c6.rhs == Rational(1, 4));

    const BoundReport none = check_bound(Graph::edgeless(3), BoundKind::degree);
    CHECK_FALSE(none.applicable);
    CHECK_FALSE(none.computed);
    CHECK_FALSE(none.reason.empty());
}

TEST_CASE("general lower bound with its surd right-hand side") {
    SUBCASE("single edge meets the bound with equality") {
        const BoundReport b = check_bound(Graph::path(2), BoundKind::main);
        CHECK(b.applicable);
        CHECK(b.computed);
        CHECK(b.rhs_is_surd);
        CHECK(b.surd_t == 3);
        CHECK(b.surd_s == 1);
        CHECK(b.holds);
        CHECK(b.tight);
    }
    SUBCASE("four-path holds strictly") {
        const BoundReport b = check_bound(Graph::path(4), BoundKind::main);
        CHECK(b.applicable);
        CHECK(b.holds);
        CHECK_FALSE(b.tight);
    }
    SUBCASE("the three exceptional graphs fail the comparison informationally") {
        for (int s = 2; s <= 4; ++s) {
            const BoundReport b =
                check_bound(Graph::complete_bipartite(s, s), BoundKind::main);
            CHECK_FALSE(b.applicable);
            CHECK(b.reason ==
                  "listed exception K_{" + std::to_string(s) + "," + std::to_string(s) + "}");
            CHECK(b.computed);
            CHECK_FALSE(b.holds);
        }
        // The balanced complete bipartite graphs outside 2..4 are covered.
        const BoundReport k11 = check_bound(Graph::complete_bipartite(1, 1), BoundKind::main);
        CHECK(k11.applicable);
        const BoundReport k55 = check_bound(Graph::complete_bipartite(5, 5), BoundKind::main);
        CHECK(k55.applicable);
        CHECK(k55.holds);
    }
    SUBCASE("disconnected or too-small inputs are not computed") {
        const BoundReport two = check_bound(Graph::edgeless(2), BoundKind::main);
        CHECK_FALSE(two.applicable);
        CHECK_FALSE(two.computed);
        const BoundReport one = check_bound(Graph::edgeless(1), BoundKind::main);
        CHECK_FALSE(one.applicable);
        CHECK_FALSE(one.computed);
    }
}

TEST_CASE("matching complexity lower bound for connected graphs") {
    const BoundReport c5 = check_bound(Graph::cycle(5), BoundKind::matching_lower);
    CHECK(c5.applicable);
    CHECK(c5.holds);       // 1 >= 2/3
    CHECK(c5.rhs == Rational(2, 3));

    const BoundReport c6 = check_bound(Graph::cycle(6), BoundKind::matching_lower);
    CHECK(c6.holds);       // 1 >= 1/2
    CHECK_FALSE(c6.tight);

    const BoundReport k33 = check_bound(Graph::complete_bipartite(3, 3), BoundKind::matching_lower);
    CHECK(k33.holds);      // 2/3 >= 1/2

    const BoundReport small = check_bound(Graph::complete(4), BoundKind::matching_lower);
    CHECK_FALSE(small.applicable);
    CHECK_FALSE(small.computed);

    const BoundReport disc = check_bound(Graph::edgeless(6), BoundKind::matching_lower);
    CHECK_FALSE(disc.applicable);
}

TEST_CASE("regular graphs: the half bound and its equality cases") {
    const BoundReport k4 = check_bound(Graph::complete(4), BoundKind::regular_half);
    CHECK(k4.applicable);
    CHECK(k4.holds);
    CHECK(k4.tight);  // matching c(K_4) == 1/2

    const BoundReport k22 = check_bound(Graph::complete_bipartite(2, 2), BoundKind::regular_half);
    CHECK(k22.holds);
    CHECK(k22.tight);

    const BoundReport c5 = check_bound(Graph::cycle(5), BoundKind::regular_half);
    CHECK(c5.holds);
    CHECK_FALSE(c5.tight);  // 1 > 1/2

    const BoundReport pet = check_bound(petersen(), BoundKind::regular_half);
    CHECK(pet.applicable);
    CHECK(pet.holds);

    const BoundReport k2 = check_bound(Graph::path(2), BoundKind::regular_half);
    CHECK_FALSE(k2.applicable);  // degree one is excluded
    const BoundReport p3 = check_bound(Graph::path(3), BoundKind::regular_half);
    CHECK_FALSE(p3.applicable);  // not regular
}

TEST_CASE("regular graphs of degree above four reach two thirds") {
    const BoundReport k6 = check_bound(Graph::complete(6), BoundKind::regular_two_thirds);
    CHECK(k6.applicable);
    CHECK(k6.holds);
    CHECK(k6.tight);  // matching c(K_6) == 2/3

    const BoundReport k7 = check_bound(Graph::complete(7), BoundKind::regular_two_thirds);
    CHECK(k7.holds);

    const BoundReport k55 =
        check_bound(Graph::complete_bipartite(5, 5), BoundKind::regular_two_thirds);
    CHECK(k55.holds);
    CHECK_FALSE(k55.tight);  // 4/5 > 2/3

    const BoundReport pet = check_bound(petersen(), BoundKind::regular_two_thirds);
    CHECK_FALSE(pet.applicable);  // degree three
}

TEST_CASE("four-regular graphs sit strictly above three fifths") {
    const BoundReport oct = check_bound(octahedron(), BoundKind::regular_four);
    CHECK(oct.applicable);
    CHECK(oct.relation == ">");
    CHECK(oct.holds);

    const BoundReport k5 = check_bound(Graph::complete(5), BoundKind::regular_four);
    CHECK(k5.applicable);
    CHECK(k5.holds);

    const BoundReport c5 = check_bound(Graph::cycle(5), BoundKind::regular_four);
    CHECK_FALSE(c5.applicable);
}

TEST_CASE("clutter surd bound") {
    SUBCASE("applicable and tight") {
        const Clutter l = make_clutter(5, {Bitset::of(5, {0, 1, 2}), Bitset::of(5, {3, 4})});
        const BoundReport b = check_bound(l, BoundKind::addendum);
        CHECK(b.applicable);
        CHECK(b.computed);
        CHECK(b.surd_t == 6);
        CHECK(b.surd_s == 4);
        CHECK(b.lhs == Rational(1, 2));
        CHECK(b.holds);
        CHECK(b.tight);
    }
    SUBCASE("applicable and strict") {
        const Clutter l = make_clutter(
            5, {Bitset::of(5, {0, 1}), Bitset::of(5, {2, 3}), Bitset::of(5, {4})});
        const BoundReport b = check_bound(l, BoundKind::addendum);
        CHECK(b.applicable);
        CHECK(b.lhs == Rational(1, 1));
        CHECK(b.holds);
        CHECK_FALSE(b.tight);
    }
    SUBCASE("divisible edge count is informational only") {
        const Clutter l = make_clutter(4, {Bitset::of(4, {0, 1}), Bitset::of(4, {2, 3})});
        const BoundReport b = check_bound(l, BoundKind::addendum);
        CHECK_FALSE(b.applicable);
        CHECK(b.reason.find("divides") != std::string::npos);
        CHECK(b.computed);
        CHECK_FALSE(b.holds);  // 1/2 < 1/(5 - 2*sqrt(3))
    }
    SUBCASE("uncovered ground set and common elements are inapplicable") {
        const Clutter uncovered = make_clutter(3, {Bitset::of(3, {0, 1})});
        CHECK_FALSE(check_bound(uncovered, BoundKind::addendum).applicable);
        const Clutter common = make_clutter(3, {Bitset::of(3, {0, 1}), Bitset::of(3, {0, 2})});
        const BoundReport b = check_bound(common, BoundKind::addendum);
        CHECK_FALSE(b.applicable);
        CHECK(b.reason.find("common") != std::string::npos);
    }
    SUBCASE("other kinds reject clutter input, graphs reject the clutter kind") {
        const Clutter l = make_clutter(2, {Bitset::of(2, {0}), Bitset::of(2, {1})});
        CHECK_FALSE(check_bound(l, BoundKind::gallai).applicable);
        CHECK_FALSE(check_bound(l, BoundKind::main).applicable);
        const BoundReport g = check_bound(Graph::complete(3), BoundKind::addendum);
        CHECK_FALSE(g.applicable);
        CHECK_FALSE(g.computed);
    }
}

TEST_CASE("matching structure holds on assorted graphs") {
    for (const Graph& g : {Graph::complete(4), Graph::cycle(5), Graph::cycle(6),
                           Graph::complete_bipartite(2, 3), Graph::star(4), petersen()}) {
        const LemmaReport rep = check_lemma(g, LemmaKind::matching_structure);
        CHECK(rep.premise_holds);
        REQUIRE(rep.conclusions.size() == 2);
        CHECK(rep.holds());
    }
    const LemmaReport none = check_lemma(Graph::edgeless(3), LemmaKind::matching_structure);
    CHECK_FALSE(none.premise_holds);
    CHECK(none.conclusions.empty());
}

TEST_CASE("minimum matchings avoid two-sided contact") {
    for (const Graph& g : {Graph::complete(5), Graph::cycle(7), Graph::path(6),
                           Graph::complete_bipartite(3, 4), octahedron()}) {
        const LemmaReport rep = check_lemma(g, LemmaKind::minimum_matching);
        CHECK(rep.premise_holds);
        CHECK(rep.holds());
    }
}

TEST_CASE("graphs whose maximal matchings are all perfect") {
    const LemmaReport k4 = check_lemma(Graph::complete(4), LemmaKind::perfect_matching_charact);
    CHECK(k4.premise_holds);
    CHECK(k4.holds());

    const LemmaReport k33 =
        check_lemma(Graph::complete_bipartite(3, 3), LemmaKind::perfect_matching_charact);
    CHECK(k33.premise_holds);
    CHECK(k33.holds());

    const LemmaReport k2 = check_lemma(Graph::path(2), LemmaKind::perfect_matching_charact);
    CHECK(k2.premise_holds);
    CHECK(k2.holds());

    // Premise fails but the two-way implication stays consistent.
    for (const Graph& g : {Graph::cycle(6), Graph::complete(5),
                           Graph::complete_bipartite(2, 3), petersen()}) {
        const LemmaReport rep = check_lemma(g, LemmaKind::perfect_matching_charact);
        CHECK_FALSE(rep.premise_holds);
        CHECK(rep.holds());
    }
}

TEST_CASE("graphs where every set is recognized by a single vertex") {
    SUBCASE("complete graph") {
        const LemmaReport rep = check_lemma(Graph::complete(4), LemmaKind::all_singletons);
        CHECK(rep.premise_holds);
        REQUIRE(rep.conclusions.size() == 7);
        CHECK(rep.holds());
        CHECK(rep.max_clique_size == 4);
        REQUIRE(rep.unique_membership.size() == 4);
        for (const auto& cls : rep.unique_membership) CHECK(cls.size() == 1);
    }
    SUBCASE("star") {
        const LemmaReport rep = check_lemma(Graph::star(4), LemmaKind::all_singletons);
        CHECK(rep.premise_holds);
        CHECK(rep.holds());
        CHECK(rep.max_clique_size == 2);
        REQUIRE(rep.unique_membership.size() == 2);
        CHECK(rep.unique_membership[0].size() + rep.unique_membership[1].size() == 5);
    }
    SUBCASE("premise failure is reported with the offending set") {
        const LemmaReport rep = check_lemma(Graph::path(6), LemmaKind::all_singletons);
        CHECK_FALSE(rep.premise_holds);
        CHECK(rep.premise_note.find("minimum recognizing size") != std::string::npos);
        CHECK(rep.conclusions.empty());
        CHECK(rep.holds());  // vacuous
    }
    SUBCASE("disconnected input fails the premise") {
        const LemmaReport rep = check_lemma(Graph::edgeless(2), LemmaKind::all_singletons);
        CHECK_FALSE(rep.premise_holds);
        CHECK(rep.premise_note == "not connected");
    }
}

TEST_CASE("the combined report covers every bound and lemma") {
    const FullReport k4 = full_report(Graph::complete(4));
    CHECK(k4.stats.complete);
    CHECK(k4.independent.c == Rational(1, 1));
    CHECK(k4.has_matching);
    CHECK(k4.matching.report.c == Rational(1, 2));
    REQUIRE(k4.bounds.size() == 7);
    REQUIRE(k4.lemmas.size() == 4);
    for (const BoundReport& b : k4.bounds)
        if (b.applicable) CHECK(b.holds);
    for (const LemmaReport& l : k4.lemmas) CHECK(l.holds());

    const FullReport c5 = full_report(Graph::cycle(5));
    CHECK(c5.stats.regular_degree == 2);
    CHECK(c5.independent.c == Rational(1, 1));
    CHECK(c5.matching.report.c == Rational(1, 1));
    for (const BoundReport& b : c5.bounds)
        if (b.applicable) CHECK(b.holds);

    // Edgeless input: no matching report, bounds mostly inapplicable.
    const FullReport iso = full_report(Graph::edgeless(3));
    CHECK_FALSE(iso.has_matching);
    CHECK(iso.independent.c == Rational(0, 1));
}

TEST_CASE("kind names round-trip") {
    for (BoundKind k : {BoundKind::gallai, BoundKind::degree, BoundKind::main,
                        BoundKind::matching_lower, BoundKind::regular_half,
                        BoundKind::regular_two_thirds, BoundKind::regular_four,
                        BoundKind::addendum}) {
        const auto back = bound_kind_from_name(bound_kind_name(k));
        REQUIRE(back.has_value());
        CHECK(*back == k);
    }
    for (LemmaKind k : {LemmaKind::matching_structure, LemmaKind::minimum_matching,
                        LemmaKind::perfect_matching_charact, LemmaKind::all_singletons}) {
        const auto back = lemma_kind_from_name(lemma_kind_name(k));
        REQUIRE(back.has_value());
        CHECK(*back == k);
    }
    CHECK(bound_kind_from_name("regular_two_thirds") == BoundKind::regular_two_thirds);
    CHECK(lemma_kind_from_name("all_singletons") == LemmaKind::all_singletons);
    CHECK_FALSE(bound_kind_from_name("nonsense").has_value());
    CHECK_FALSE(lemma_kind_from_name("nonsense").has_value());
}
