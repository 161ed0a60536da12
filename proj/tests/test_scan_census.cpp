#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "clut/census.hpp"
#include "clut/clutter.hpp"
#include "clut/errors.hpp"
#include "clut/graph.hpp"
#include "clut/scan.hpp"

using namespace clut;

namespace {

// Canonical form by brute force: the minimum adjacency bitmask over all
// vertex relabelings.  Only viable for small n; that is the point — it is
// independent of the library's refinement-based isomorphism test.
uint64_t brute_canonical(const Graph& g) {
    const int n = g.n();
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    uint64_t best = ~0ull;
    do {
        uint64_t mask = 0;
        for (const auto& [u, v] : g.edges())
            mask |= 1ull << pair_bit(n, p[static_cast<size_t>(u)], p[static_cast<size_t>(v)]);
        best = std::min(best, mask);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

Graph prufer_decode(const std::vector<int>& seq, int n) {
    std::vector<int> deg(static_cast<size_t>(n), 1);
    for (int x : seq) ++deg[static_cast<size_t>(x)];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<size_t>(v)] == 1) leaves.insert(v);
    std::vector<std::pair<int, int>> edges;
    for (int x : seq) {
        const int l = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(l, x), std::max(l, x));
        if (--deg[static_cast<size_t>(x)] == 1) leaves.insert(x);
    }
    const int a = *leaves.begin();
    const int b = *std::next(leaves.begin());
    edges.emplace_back(std::min(a, b), std::max(a, b));
    return Graph::from_edges(n, edges);
}

} // namespace

TEST_CASE("graph census counts match the published tables") {
    const std::vector<size_t> all = {1, 2, 4, 11, 34, 156, 1044, 12346};
    for (int n = 1; n <= 8; ++n) CHECK(all_graphs(n).size() == all[static_cast<size_t>(n - 1)]);

    const std::vector<size_t> conn = {1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n) {
        const std::vector<SmallGraph> gs = connected_graphs(n);
        CHECK(gs.size() == conn[static_cast<size_t>(n - 1)]);
        for (const SmallGraph& sg : gs) CHECK(is_connected(small_to_graph(sg)));
    }
}

TEST_CASE("tree census counts match the published table") {
    const std::vector<size_t> want = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (int n = 1; n <= 12; ++n) {
        const std::vector<Graph> ts = all_trees(n);
        CHECK(ts.size() == want[static_cast<size_t>(n - 1)]);
        for (const Graph& t : ts) {
            CHECK(t.n() == n);
            CHECK(t.m() == n - 1);
            CHECK(is_connected(t));
        }
    }
}

TEST_CASE("connected regular census counts match the published table") {
    const std::vector<size_t> want = {1, 1, 1, 2, 2, 5, 4, 17, 22, 167};
    for (int n = 1; n <= 10; ++n) {
        const std::vector<SmallGraph> gs = connected_regular_graphs(n);
        CHECK(gs.size() == want[static_cast<size_t>(n - 1)]);
        for (const SmallGraph& sg : gs) {
            const Graph g = small_to_graph(sg);
            CHECK(is_connected(g));
            const GraphStats st = graph_stats(g);
            CHECK(st.regular);
        }
    }

    // Ten-vertex breakdown by degree.
    std::map<int, int> by_degree;
    for (const SmallGraph& sg : connected_regular_graphs(10))
        ++by_degree[*graph_stats(small_to_graph(sg)).regular_degree];
    const std::map<int, int> expect = {{2, 1}, {3, 19}, {4, 59}, {5, 60},
                                       {6, 21}, {7, 5},  {8, 1}, {9, 1}};
    CHECK(by_degree == expect);
}

TEST_CASE("census classes on five vertices are exactly the isomorphism classes") {
    const std::vector<SmallGraph> reps = all_graphs(5);
    REQUIRE(reps.size() == 34);

    std::set<uint64_t> rep_canon;
    for (const SmallGraph& sg : reps) rep_canon.insert(brute_canonical(small_to_graph(sg)));
    CHECK(rep_canon.size() == 34);  // pairwise non-isomorphic

    // Every one of the 2^10 labeled graphs falls in one of the 34 classes.
    std::set<uint64_t> labeled_canon;
    for (uint32_t mask = 0; mask < (1u << 10); ++mask) {
        std::vector<std::pair<int, int>> edges;
        int bit = 0;
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v, ++bit)
                if (mask & (1u << bit)) edges.emplace_back(u, v);
        labeled_canon.insert(brute_canonical(Graph::from_edges(5, edges)));
    }
    CHECK(labeled_canon == rep_canon);
}

TEST_CASE("tree classes on small orders are exactly the isomorphism classes") {
    const std::vector<Graph> reps7 = all_trees(7);
    std::set<uint64_t> canon7;
    for (const Graph& t : reps7) canon7.insert(brute_canonical(t));
    CHECK(canon7.size() == 11);

    // All 6^4 labeled trees on six vertices land in the six census classes.
    const std::vector<Graph> reps6 = all_trees(6);
    std::set<uint64_t> canon6;
    for (const Graph& t : reps6) canon6.insert(brute_canonical(t));
    REQUIRE(canon6.size() == 6);
    std::set<uint64_t> labeled;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 6; ++c)
                for (int d = 0; d < 6; ++d)
                    labeled.insert(brute_canonical(prufer_decode({a, b, c, d}, 6)));
    CHECK(labeled == canon6);
}

TEST_CASE("census graphs round-trip through graph6") {
    for (const SmallGraph& sg : all_graphs(6)) {
        const Graph g = small_to_graph(sg);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
    // Compact integer form round-trips as well.
    for (const SmallGraph& sg : connected_graphs(7)) {
        const Graph g = small_to_graph(sg);
        const SmallGraph back = graph_to_small(g);
        CHECK(back.n == sg.n);
        CHECK(back.bits == sg.bits);
    }
}

TEST_CASE("builtin scan over five vertices, tallied by hand") {
    const ScanReport rep = conjecture_scan_builtin(5);
    CHECK(rep.total == 1099);  // 1 + 2 + 8 + 64 + 1024 labeled graphs
    CHECK(rep.scanned == 19);  // K_2, K_3, 3x C_4, K_4, 12x C_5, K_5
    CHECK(rep.skipped_not_connected == 327);
    CHECK(rep.skipped_not_regular == 752);
    CHECK(rep.skipped_no_edges == 1);  // the one-vertex graph
    CHECK(rep.complexity_one == 14);   // K_3 + 12x C_5 + K_5
    CHECK(rep.exceptions.size() == 5); // K_2, 3x C_4, K_4
    CHECK(rep.counterexamples.empty());
    CHECK(rep.consistent());
    CHECK(rep.parse_errors.empty());

    std::map<std::string, int> shapes;
    for (const ScanEntry& e : rep.exceptions) {
        ++shapes[e.shape];
        if (e.shape == "K_{2n}")
            CHECK((e.c == Rational(0, 1) || e.c == Rational(1, 2)));
        else
            CHECK(e.c == Rational(1, 2));  // the three labelings of C_4 = K_{2,2}
    }
    CHECK(shapes == std::map<std::string, int>{{"K_{2n}", 2}, {"K_{n,n}", 3}});
}

TEST_CASE("builtin scan over six vertices stays consistent") {
    const ScanReport rep = conjecture_scan_builtin(6);
    CHECK(rep.total == 33867);
    CHECK(rep.scanned == 165);  // + 60x C_6, 60x prism, 10x K_{3,3}, 15x octahedron, K_6
    CHECK(rep.complexity_one == 149);
    CHECK(rep.exceptions.size() == 16);
    CHECK(rep.consistent());

    std::map<std::string, int> shapes;
    for (const ScanEntry& e : rep.exceptions) ++shapes[e.shape];
    CHECK(shapes == std::map<std::string, int>{{"K_{2n}", 3}, {"K_{n,n}", 13}});

    // The two-thirds entries are K_{3,3} (ten labelings) and K_6.
    int two_thirds = 0;
    for (const ScanEntry& e : rep.exceptions)
        if (e.c == Rational(2, 3)) ++two_thirds;
    CHECK(two_thirds == 11);
}

TEST_CASE("builtin scan rejects unsupported sizes") {
    CHECK_THROWS_AS(conjecture_scan_builtin(0), InputError);
    CHECK_THROWS_AS(conjecture_scan_builtin(8), InputError);
}

TEST_CASE("stream scan: seven-cycle exception, markers, and bad lines") {
    std::ostringstream feed;
    feed << ">>graph6<<" << to_graph6(Graph::cycle(7)) << "\n";
    feed << "\n";  // blank: ignored
    std::vector<std::pair<int, int>> pe;
    for (int i = 0; i < 5; ++i) {
        pe.emplace_back(i, (i + 1) % 5);
        pe.emplace_back(i, i + 5);
        pe.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    feed << to_graph6(Graph::from_edges(10, pe)) << "\n";  // Petersen
    feed << to_graph6(Graph::complete(4)) << "\n";
    feed << to_graph6(Graph::path(4)) << "\n";             // not regular
    feed << "!!notgraph6!!\n";

    std::istringstream in(feed.str());
    const ScanReport rep = conjecture_scan(in);
    CHECK(rep.total == 5);
    CHECK(rep.scanned == 3);
    CHECK(rep.skipped_not_regular == 1);
    REQUIRE(rep.parse_errors.size() == 1);
    CHECK(rep.parse_errors[0].find("line 6") != std::string::npos);
    CHECK(rep.complexity_one == 1);  // the Petersen graph
    REQUIRE(rep.exceptions.size() == 2);
    CHECK(rep.exceptions[0].shape == "C_7");
    CHECK(rep.exceptions[0].c == Rational(2, 3));
    CHECK(rep.exceptions[0].n == 7);
    CHECK(rep.exceptions[0].r == 2);
    CHECK(rep.exceptions[1].shape == "K_{2n}");
    CHECK(rep.consistent());
}

TEST_CASE("scan reports are identical for any worker count") {
    const ScanReport a = conjecture_scan_builtin(5, 1);
    const ScanReport b = conjecture_scan_builtin(5, 4);
    CHECK(a.total == b.total);
    CHECK(a.scanned == b.scanned);
    CHECK(a.complexity_one == b.complexity_one);
    REQUIRE(a.exceptions.size() == b.exceptions.size());
    for (size_t i = 0; i < a.exceptions.size(); ++i) {
        CHECK(a.exceptions[i].g6 == b.exceptions[i].g6);
        CHECK(a.exceptions[i].c == b.exceptions[i].c);
        CHECK(a.exceptions[i].shape == b.exceptions[i].shape);
    }
}
