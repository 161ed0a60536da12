#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "clut/bitset.hpp"
#include "clut/kernels.hpp"

using namespace clut;

namespace {

Bitset from_set(int nbits, const std::set<int>& s) {
    Bitset b(nbits);
    for (const int v : s) b.set(v);
    return b;
}

} // namespace

TEST_CASE("bitset basics against a std::set model") {
    std::mt19937_64 rng(12345);
    for (const int nbits : {1, 7, 63, 64, 65, 100, 128, 200}) {
        std::set<int> ma, mb;
        Bitset a(nbits), b(nbits);
        std::uniform_int_distribution<int> pick(0, nbits - 1);
        for (int step = 0; step < 300; ++step) {
            const int v = pick(rng);
            switch (rng() % 3) {
            case 0:
                a.set(v);
                ma.insert(v);
                break;
            case 1:
                a.reset(v);
                ma.erase(v);
                break;
            default:
                b.set(v);
                mb.insert(v);
                break;
            }
        }
        CHECK(a.count() == static_cast<int>(ma.size()));
        CHECK(a.any() == !ma.empty());
        for (int v = 0; v < nbits; ++v) CHECK(a.test(v) == (ma.count(v) > 0));

        // first/next iteration order.
        std::vector<int> seen;
        for (int v = a.first(); v >= 0; v = a.next(v)) seen.push_back(v);
        CHECK(seen == std::vector<int>(ma.begin(), ma.end()));
        CHECK(a.to_vector() == seen);
        CHECK(Bitset::from_vector(nbits, seen) == a);

        // set algebra.
        std::set<int> mu, mi, md;
        std::set_union(ma.begin(), ma.end(), mb.begin(), mb.end(), std::inserter(mu, mu.end()));
        std::set_intersection(ma.begin(), ma.end(), mb.begin(), mb.end(),
                              std::inserter(mi, mi.end()));
        std::set_difference(ma.begin(), ma.end(), mb.begin(), mb.end(),
                            std::inserter(md, md.end()));
        CHECK((a | b) == from_set(nbits, mu));
        CHECK((a & b) == from_set(nbits, mi));
        CHECK(minus(a, b) == from_set(nbits, md));
        CHECK(a.intersects(b) == !mi.empty());
        CHECK(a.contains(from_set(nbits, mi)));
        CHECK(b.contains(a) == std::includes(mb.begin(), mb.end(), ma.begin(), ma.end()));

        // complement.
        const Bitset c = a.complement();
        for (int v = 0; v < nbits; ++v) CHECK(c.test(v) == !a.test(v));
        CHECK((a | c) == Bitset::full(nbits));
    }
}

TEST_CASE("bitset lexicographic order prefers smaller leading elements") {
    // {0,3} < {1,2}: lowest differing element decides.
    const Bitset a = Bitset::of(8, {0, 3});
    const Bitset b = Bitset::of(8, {1, 2});
    CHECK(a.lex_less(b));
    CHECK_FALSE(b.lex_less(a));
    CHECK_FALSE(a.lex_less(a));
    // Different sizes: the smallest element of the symmetric difference
    // decides, so {1,2} < {1} (2 belongs to the left side) and the empty
    // set is the maximum.  Equal-size comparisons never hit these cases.
    CHECK(b.lex_less(Bitset::of(8, {1})));
    CHECK_FALSE(lex_less(Bitset::of(8, {1}), b));
    CHECK(a.lex_less(Bitset(8)));
    CHECK_FALSE(Bitset(8).lex_less(a));
}

TEST_CASE("bitset of/full helpers") {
    const Bitset s = Bitset::of(70, {0, 63, 64, 69});
    CHECK(s.count() == 4);
    CHECK(s.test(63));
    CHECK(s.test(64));
    CHECK(Bitset::full(70).count() == 70);
    CHECK(Bitset::full(70).contains(s));
}

namespace {

// Reference implementations to triple-check both kernel variants.
int ref_find_superset(const std::vector<Bitset>& rows, const Bitset& mask, int skip) {
    for (size_t r = 0; r < rows.size(); ++r)
        if (static_cast<int>(r) != skip && rows[r].contains(mask)) return static_cast<int>(r);
    return -1;
}

bool ref_all_rows_intersect(const std::vector<Bitset>& rows, const Bitset& mask) {
    for (const Bitset& r : rows)
        if (!r.intersects(mask)) return false;
    return true;
}

int ref_best_gain_row(const std::vector<Bitset>& rows, const Bitset& covered, int* gain) {
    int best = -1;
    int best_gain = -1;
    for (size_t r = 0; r < rows.size(); ++r) {
        const int g = minus(rows[r], covered).count();
        if (g > best_gain) {
            best_gain = g;
            best = static_cast<int>(r);
        }
    }
    if (gain) *gain = best_gain;
    return best;
}

std::vector<uint64_t> pack(const std::vector<Bitset>& rows) {
    std::vector<uint64_t> words;
    for (const Bitset& r : rows)
        for (int i = 0; i < r.nwords(); ++i) words.push_back(r.word(i));
    return words;
}

} // namespace

TEST_CASE("kernel variants agree with each other and with the reference") {
    std::mt19937_64 rng(777);
    const kern::Ops& scalar = kern::scalar_ops();
    const kern::Ops* avx2 = kern::avx2_ops();
    INFO("active kernel: " << kern::ops().name);

    for (int trial = 0; trial < 200; ++trial) {
        const int nbits = 1 + static_cast<int>(rng() % 190);
        const int nrows = 1 + static_cast<int>(rng() % 40);
        std::vector<Bitset> rows;
        for (int r = 0; r < nrows; ++r) {
            Bitset b(nbits);
            for (int v = 0; v < nbits; ++v)
                if (rng() % 3 == 0) b.set(v);
            rows.push_back(b);
        }
        Bitset mask(nbits);
        for (int v = 0; v < nbits; ++v)
            if (rng() % 4 == 0) mask.set(v);
        // Sometimes take a subset of a row so supersets exist.
        if (trial % 3 == 0) {
            mask = rows[rng() % nrows];
            for (int v = mask.first(); v >= 0; v = mask.next(v))
                if (rng() % 2) mask.reset(v);
        }
        const std::vector<uint64_t> words = pack(rows);
        const int nwords = rows[0].nwords();
        const int skip = static_cast<int>(rng() % nrows);

        const int want_sup = ref_find_superset(rows, mask, skip);
        CHECK(scalar.find_superset(words.data(), nrows, nwords, mask.words(), skip) == want_sup);
        const bool want_int = ref_all_rows_intersect(rows, mask);
        CHECK(scalar.all_rows_intersect(words.data(), nrows, nwords, mask.words()) == want_int);
        int want_gain = -1;
        const int want_row = ref_best_gain_row(rows, mask, &want_gain);
        int got_gain = -1;
        CHECK(scalar.best_gain_row(words.data(), nrows, nwords, mask.words(), &got_gain) ==
              want_row);
        CHECK(got_gain == want_gain);

        if (avx2) {
            CHECK(avx2->find_superset(words.data(), nrows, nwords, mask.words(), skip) ==
                  want_sup);
            CHECK(avx2->all_rows_intersect(words.data(), nrows, nwords, mask.words()) == want_int);
            int g2 = -1;
            CHECK(avx2->best_gain_row(words.data(), nrows, nwords, mask.words(), &g2) == want_row);
            CHECK(g2 == want_gain);
        }
    }
}

TEST_CASE("force_scalar switches the active implementation") {
    const std::string before = kern::ops().name;
    kern::force_scalar(true);
    CHECK(std::string(kern::ops().name) == kern::scalar_ops().name);
    kern::force_scalar(false);
    CHECK(std::string(kern::ops().name) == before);
}
