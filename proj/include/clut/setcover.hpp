#pragma once

#include <vector>

#include "clut/bitset.hpp"

namespace clut {

// Classic minimum set cover over a ground set 0..universe-1.
struct SetCoverInstance {
    int universe = 0;
    std::vector<Bitset> sets;
};

struct SetCoverResult {
    std::vector<int> chosen; // indices into instance.sets, ascending
    bool exact = true;
};

// Exact branch-and-bound.  Among all minimum-size covers returns the one
// whose ascending index sequence is lexicographically smallest.
// InputError if the sets do not cover the universe.
SetCoverResult min_set_cover(const SetCoverInstance& inst);

// Standard greedy (largest uncovered gain, ties to the lowest index).
// Upper bound only; the result is flagged exact = false.
SetCoverResult greedy_set_cover(const SetCoverInstance& inst);

} // namespace clut
