#include "clut/kernels.hpp"

#include <bit>
#include <cstddef>

namespace clut::kern {
namespace {

int find_superset_scalar(const uint64_t* rows, int nrows, int nwords,
                         const uint64_t* mask, int skip) {
    if (nwords == 1) {
        const uint64_t m = mask[0];
        for (int r = 0; r < nrows; ++r)
            if ((rows[r] & m) == m && r != skip) return r;
        return -1;
    }
    for (int r = 0; r < nrows; ++r) {
        if (r == skip) continue;
        const uint64_t* row = rows + static_cast<size_t>(r) * nwords;
        bool super = true;
        for (int w = 0; w < nwords; ++w) {
            if (mask[w] & ~row[w]) { super = false; break; }
        }
        if (super) return r;
    }
    return -1;
}

bool all_rows_intersect_scalar(const uint64_t* rows, int nrows, int nwords,
                               const uint64_t* mask) {
    if (nwords == 1) {
        const uint64_t m = mask[0];
        for (int r = 0; r < nrows; ++r)
            if (!(rows[r] & m)) return false;
        return true;
    }
    for (int r = 0; r < nrows; ++r) {
        const uint64_t* row = rows + static_cast<size_t>(r) * nwords;
        uint64_t acc = 0;
        for (int w = 0; w < nwords; ++w) acc |= row[w] & mask[w];
        if (!acc) return false;
    }
    return true;
}

int best_gain_row_scalar(const uint64_t* rows, int nrows, int nwords,
                         const uint64_t* covered, int* out_gain) {
    int best = -1, best_gain = -1;
    for (int r = 0; r < nrows; ++r) {
        const uint64_t* row = rows + static_cast<size_t>(r) * nwords;
        int gain = 0;
        for (int w = 0; w < nwords; ++w) gain += std::popcount(row[w] & ~covered[w]);
        if (gain > best_gain) { best_gain = gain; best = r; }
    }
    if (out_gain) *out_gain = best_gain;
    return best;
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops{find_superset_scalar, all_rows_intersect_scalar,
                         best_gain_row_scalar, "scalar"};
    return ops;
}

} // namespace clut::kern
