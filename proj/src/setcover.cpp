#include "clut/setcover.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "clut/errors.hpp"
#include "clut/kernels.hpp"

namespace clut {

namespace {

// Packed row matrix plus suffix unions for feasibility pruning.
struct Packed {
    int nsets = 0;
    int nwords = 0;
    std::vector<uint64_t> rows;
    std::vector<uint64_t> suffix; // suffix[i] = union of rows i..nsets-1, (nsets+1) rows

    explicit Packed(const SetCoverInstance& inst) {
        nsets = static_cast<int>(inst.sets.size());
        nwords = words_for(inst.universe);
        for (const Bitset& s : inst.sets) {
            if (s.universe() != inst.universe)
                throw InputError("set universe does not match the instance universe");
        }
        rows.assign(static_cast<size_t>(nsets) * nwords, 0);
        for (int i = 0; i < nsets; ++i)
            for (int w = 0; w < nwords; ++w)
                rows[static_cast<size_t>(i) * nwords + w] = inst.sets[i].word(w);
        suffix.assign(static_cast<size_t>(nsets + 1) * nwords, 0);
        for (int i = nsets - 1; i >= 0; --i)
            for (int w = 0; w < nwords; ++w)
                suffix[static_cast<size_t>(i) * nwords + w] =
                    suffix[static_cast<size_t>(i + 1) * nwords + w] |
                    rows[static_cast<size_t>(i) * nwords + w];
    }

    const uint64_t* row(int i) const { return rows.data() + static_cast<size_t>(i) * nwords; }
    const uint64_t* suf(int i) const { return suffix.data() + static_cast<size_t>(i) * nwords; }
};

void require_solvable(const SetCoverInstance& inst, const Packed& p) {
    Bitset full = Bitset::full(inst.universe);
    for (int w = 0; w < p.nwords; ++w) {
        if ((p.suf(0)[w] & full.word(w)) != full.word(w))
            throw InputError("set cover instance is unsolvable: the sets do not cover the universe");
    }
}

std::vector<int> run_greedy(const SetCoverInstance& inst, const Packed& p) {
    const int nw = p.nwords;
    Bitset covered(inst.universe);
    Bitset full = Bitset::full(inst.universe);
    std::vector<int> chosen;
    while (covered != full) {
        int gain = 0;
        int best = kern::ops().best_gain_row(p.rows.data(), p.nsets, nw, covered.words(), &gain);
        if (best < 0 || gain == 0)
            throw InputError("set cover instance is unsolvable: the sets do not cover the universe");
        chosen.push_back(best);
        for (int w = 0; w < nw; ++w) covered.words()[w] |= p.row(best)[w];
    }
    // The greedy loop picks by gain, so indices arrive unordered.
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

} // namespace

SetCoverResult greedy_set_cover(const SetCoverInstance& inst) {
    Packed p(inst);
    SetCoverResult r;
    r.chosen = run_greedy(inst, p);
    r.exact = false;
    return r;
}

SetCoverResult min_set_cover(const SetCoverInstance& inst) {
    Packed p(inst);
    require_solvable(inst, p);
    const int nw = p.nwords;
    const Bitset full = Bitset::full(inst.universe);

    std::vector<int> greedy = run_greedy(inst, p);

    std::vector<int> best;
    bool have_best = false;
    // Before any incumbent exists, allow solutions up to the greedy size;
    // afterwards only strictly smaller ones.  Equal-size covers found later
    // in the include-first scan are lexicographically larger, so pruning at
    // the incumbent size preserves the canonical tie-break.
    int threshold = static_cast<int>(greedy.size()) + 1;

    std::vector<int> chosen;
    Bitset covered(inst.universe);

    auto dfs = [&](auto&& self, int i) -> void {
        if (covered == full) {
            best = chosen;
            have_best = true;
            threshold = static_cast<int>(best.size());
            return;
        }
        if (i == p.nsets) return;
        // Feasibility: every still-uncovered element must appear in some
        // remaining set.
        for (int w = 0; w < nw; ++w) {
            uint64_t uncovered = full.word(w) & ~covered.word(w);
            if (uncovered & ~p.suf(i)[w]) return;
        }
        int max_gain = 0;
        kern::ops().best_gain_row(p.row(i), p.nsets - i, nw, covered.words(), &max_gain);
        if (max_gain == 0) return;
        int uncovered_count = 0;
        for (int w = 0; w < nw; ++w)
            uncovered_count += std::popcount(full.word(w) & ~covered.word(w));
        int lb = (uncovered_count + max_gain - 1) / max_gain;
        if (static_cast<int>(chosen.size()) + lb >= threshold) return;

        // Include set i first (lexicographically smaller index sequences come
        // first), but only when it makes progress.
        int gain_i = 0;
        for (int w = 0; w < nw; ++w) gain_i += std::popcount(p.row(i)[w] & ~covered.word(w));
        if (gain_i > 0) {
            Bitset saved = covered;
            for (int w = 0; w < nw; ++w) covered.words()[w] |= p.row(i)[w];
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
            covered = saved;
        }
        self(self, i + 1);
    };
    dfs(dfs, 0);

    SetCoverResult r;
    // The search always admits covers up to the greedy size, so a solvable
    // instance always produces an incumbent; the fallback is pure defence.
    r.chosen = have_best ? std::move(best) : std::move(greedy);
    r.exact = true;
    return r;
}

} // namespace clut
