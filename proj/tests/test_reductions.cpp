#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "clut/clutter.hpp"
#include "clut/errors.hpp"
#include "clut/reductions.hpp"
#include "clut/setcover.hpp"

using namespace clut;

namespace {

SetCoverInstance random_covering_instance(std::mt19937_64& rng, int n, int m) {
    SetCoverInstance inst;
    inst.universe = n;
    inst.sets.assign(static_cast<size_t>(m), Bitset(n));
    for (int i = 0; i < n; ++i) {
        // Guarantee coverage, then sprinkle extra memberships.
        inst.sets[rng() % static_cast<uint64_t>(m)].set(i);
        for (int j = 0; j < m; ++j)
            if (rng() % 3 == 0) inst.sets[static_cast<size_t>(j)].set(i);
    }
    return inst;
}

// The fixed example used throughout: universe {0,1,2}, sets {0,1}, {1,2}, {2}.
// Minimum covers have size 2 ({0,1} with either of the others covering 2).
SetCoverInstance fixed_instance() {
    SetCoverInstance inst;
    inst.universe = 3;
    inst.sets = {Bitset::of(3, {0, 1}), Bitset::of(3, {1, 2}), Bitset::of(3, {2})};
    return inst;
}

} // namespace

TEST_CASE("membership gadget structure") {
    const SetCoverInstance inst = fixed_instance();
    const ReductionOutput out = build_problem1_graph(inst);
    CHECK(out.universe == 3);
    CHECK(out.nsets == 3);
    CHECK(out.multiplicity == 1);
    CHECK(out.graph.n() == 6);
    REQUIRE(out.roles.size() == 6);
    // Elements first, then set vertices.
    for (int v = 0; v < 3; ++v) {
        CHECK(out.roles[static_cast<size_t>(v)] == VertexRole::element);
        CHECK(out.role_index[static_cast<size_t>(v)] == v);
        CHECK(out.copy_index[static_cast<size_t>(v)] == 0);
        CHECK_FALSE(out.distinguished_mis.test(v));
    }
    for (int v = 3; v < 6; ++v) {
        CHECK(out.roles[static_cast<size_t>(v)] == VertexRole::set_vertex);
        CHECK(out.role_index[static_cast<size_t>(v)] == v - 3);
        CHECK(out.copy_index[static_cast<size_t>(v)] == -1);
        CHECK(out.distinguished_mis.test(v));
    }
    // Adjacency mirrors membership exactly.
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(out.graph.adjacent(i, 3 + j) ==
                  inst.sets[static_cast<size_t>(j)].test(i));
    // No edges within a side.
    CHECK_FALSE(out.graph.adjacent(0, 1));
    CHECK_FALSE(out.graph.adjacent(3, 4));

    // The distinguished side really is a maximal independent set.
    const Clutter mis = maximal_independent_sets(out.graph);
    bool found = false;
    for (const Bitset& e : mis.edges)
        if (e == out.distinguished_mis) found = true;
    CHECK(found);
}

TEST_CASE("blow-up gadget structure") {
    const SetCoverInstance inst = fixed_instance();
    const ReductionOutput out = build_problem2_graph(inst, 4);
    CHECK(out.multiplicity == 4);
    CHECK(out.graph.n() == 3 * 4 + 3);
    // Copy (i, k) of element i sits at i*multiplicity + k and inherits the
    // element's memberships.
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < 4; ++k) {
            const int v = i * 4 + k;
            CHECK(out.roles[static_cast<size_t>(v)] == VertexRole::element);
            CHECK(out.role_index[static_cast<size_t>(v)] == i);
            CHECK(out.copy_index[static_cast<size_t>(v)] == k);
            for (int j = 0; j < 3; ++j)
                CHECK(out.graph.adjacent(v, 12 + j) ==
                      inst.sets[static_cast<size_t>(j)].test(i));
        }
    }
    // Twin copies are never adjacent to each other.
    CHECK_FALSE(out.graph.adjacent(0, 1));
    CHECK_FALSE(out.graph.adjacent(0, 2));

    // Default multiplicity is (n+m)^2.
    CHECK(build_problem2_graph(inst).multiplicity == 36);
    // Multiplicity 1 coincides with the membership gadget.
    CHECK(build_problem2_graph(inst, 1).graph == build_problem1_graph(inst).graph);
}

TEST_CASE("fixed instance verifies for both reductions") {
    const SetCoverInstance inst = fixed_instance();
    CHECK(min_set_cover(inst).chosen == std::vector<int>{0, 1});

    const ReductionReport r1 = verify_reduction(inst, ReductionKind::problem1);
    CHECK(r1.ok);
    CHECK(r1.failures.empty());
    CHECK(r1.l_min == 2);
    CHECK(r1.distinguished_min_recognizing == 2);
    CHECK(r1.distinguished_complexity == Rational(2, 3));
    REQUIRE(r1.cover_exists.size() == 4);
    CHECK_FALSE(r1.cover_exists[0]);
    CHECK_FALSE(r1.cover_exists[1]);
    CHECK(r1.cover_exists[2]);
    CHECK(r1.cover_exists[3]);
    CHECK(r1.cover_exists == r1.recognizing_exists);

    const ReductionReport r2 = verify_reduction(inst, ReductionKind::problem2);
    CHECK(r2.ok);
    CHECK(r2.multiplicity == 36);
    CHECK(r2.whole_complexity == Rational(2, 3));
    CHECK(r2.expected == Rational(2, 3));
    CHECK(r2.has_other);
    CHECK(r2.worst_other < Rational(1, 3));
}

TEST_CASE("multiplicity one is genuinely insufficient for the collapse") {
    // With no blow-up the element side (or a mixed set) can dominate: the
    // whole-graph complexity stays above l_min/m and verification reports it.
    const ReductionReport r = verify_reduction(fixed_instance(), ReductionKind::problem2, 1);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.failures.empty());
    CHECK(r.whole_complexity > r.expected);
}

TEST_CASE("random instances verify across all cover sizes") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const int m = 1 + static_cast<int>(rng() % 5);
        const SetCoverInstance inst = random_covering_instance(rng, n, m);
        const ReductionReport r = verify_reduction(inst, ReductionKind::problem1);
        CHECK(r.ok);
        CHECK(r.distinguished_min_recognizing == r.l_min);
        CHECK(r.cover_exists == r.recognizing_exists);
        CHECK(r.l_min == static_cast<int>(min_set_cover(inst).chosen.size()));
    }
}

TEST_CASE("random instances collapse at the default blow-up") {
    std::mt19937_64 rng(6021);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const int m = 1 + static_cast<int>(rng() % 3);
        const SetCoverInstance inst = random_covering_instance(rng, n, m);
        const ReductionReport r = verify_reduction(inst, ReductionKind::problem2);
        CHECK(r.ok);
        CHECK(r.whole_complexity == r.expected);
        CHECK(r.whole_complexity == Rational(r.l_min, m));
    }
}

TEST_CASE("input validation") {
    // Sets that do not cover the universe: the set side is not maximal.
    SetCoverInstance gap;
    gap.universe = 3;
    gap.sets = {Bitset::of(3, {0, 1})};
    CHECK_THROWS_AS(build_problem1_graph(gap), InputError);
    CHECK_THROWS_AS(build_problem2_graph(gap), InputError);
    CHECK_THROWS_AS(verify_reduction(gap, ReductionKind::problem1), InputError);

    // Exhaustive verification is capped: 2^m cover enumeration.
    SetCoverInstance big;
    big.universe = 1;
    big.sets.assign(17, Bitset::of(1, {0}));
    CHECK_THROWS_AS(verify_reduction(big, ReductionKind::problem1), InputError);

    // Empty universe is rejected.
    SetCoverInstance none;
    none.universe = 0;
    CHECK_THROWS_AS(build_problem1_graph(none), InputError);
}
