#pragma once

#include <cstdint>

namespace clut::kern {

// Batch kernels over packed bitset rows.  A "row matrix" is `nrows * nwords`
// contiguous 64-bit words, row-major.  These are the hot loops of the
// enumeration and search code (superset scans over clutter edges, domination
// feasibility, greedy set-cover gain selection), so each has a scalar
// reference implementation and an AVX2 variant; the active implementation is
// chosen once at startup from CPU capabilities and can be forced to scalar
// for differential testing.
struct Ops {
    // First row index r != skip with rows[r] ⊇ mask; -1 if none.
    int (*find_superset)(const uint64_t* rows, int nrows, int nwords,
                         const uint64_t* mask, int skip);
    // True iff every row shares at least one bit with mask.
    bool (*all_rows_intersect)(const uint64_t* rows, int nrows, int nwords,
                               const uint64_t* mask);
    // Index of the row maximizing |row \ covered| (ties -> lowest index);
    // the gain is written to *out_gain.  Returns -1 when nrows == 0.
    int (*best_gain_row)(const uint64_t* rows, int nrows, int nwords,
                         const uint64_t* covered, int* out_gain);
    const char* name;
};

const Ops& scalar_ops();
const Ops* avx2_ops();      // nullptr when unavailable on this CPU/build
const Ops& ops();           // active implementation
void force_scalar(bool on); // test/CLI override (also honoured: CLUT_NO_AVX2=1)

} // namespace clut::kern
