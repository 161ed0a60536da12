#ifdef CLUT_HAVE_AVX2

#include "clut/kernels.hpp"

#include <bit>
#include <immintrin.h>

namespace clut::kern {
namespace {

// Single-word rows are the common case (ground sets up to 64 elements), so
// they get row-parallel treatment: 4 rows per 256-bit vector.  Wider rows fall
// back to word-parallel processing inside each row.

int find_superset_avx2(const uint64_t* rows, int nrows, int nwords,
                       const uint64_t* mask, int skip) {
    if (nwords == 1) {
        const uint64_t m = mask[0];
        const __m256i vm = _mm256_set1_epi64x(static_cast<long long>(m));
        int r = 0;
        for (; r + 4 <= nrows; r += 4) {
            __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + r));
            __m256i eq = _mm256_cmpeq_epi64(_mm256_and_si256(v, vm), vm);
            unsigned lanes = static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(eq)));
            while (lanes) {
                int lane = std::countr_zero(lanes);
                if (r + lane != skip) return r + lane;
                lanes &= lanes - 1;
            }
        }
        for (; r < nrows; ++r)
            if ((rows[r] & m) == m && r != skip) return r;
        return -1;
    }
    for (int r = 0; r < nrows; ++r) {
        if (r == skip) continue;
        const uint64_t* row = rows + static_cast<size_t>(r) * nwords;
        int w = 0;
        bool super = true;
        for (; w + 4 <= nwords; w += 4) {
            __m256i rm = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + w));
            __m256i mm = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(mask + w));
            __m256i missing = _mm256_andnot_si256(rm, mm);
            if (!_mm256_testz_si256(missing, missing)) { super = false; break; }
        }
        if (super)
            for (; w < nwords; ++w)
                if (mask[w] & ~row[w]) { super = false; break; }
        if (super) return r;
    }
    return -1;
}

bool all_rows_intersect_avx2(const uint64_t* rows, int nrows, int nwords,
                             const uint64_t* mask) {
    if (nwords == 1) {
        const __m256i vm = _mm256_set1_epi64x(static_cast<long long>(mask[0]));
        const __m256i zero = _mm256_setzero_si256();
        int r = 0;
        for (; r + 4 <= nrows; r += 4) {
            __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + r));
            __m256i isect = _mm256_and_si256(v, vm);
            // A zero lane means some row misses the mask entirely.
            if (_mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(isect, zero))))
                return false;
        }
        for (; r < nrows; ++r)
            if (!(rows[r] & mask[0])) return false;
        return true;
    }
    for (int r = 0; r < nrows; ++r) {
        const uint64_t* row = rows + static_cast<size_t>(r) * nwords;
        uint64_t acc = 0;
        int w = 0;
        __m256i vacc = _mm256_setzero_si256();
        for (; w + 4 <= nwords; w += 4) {
            __m256i rm = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + w));
            __m256i mm = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(mask + w));
            vacc = _mm256_or_si256(vacc, _mm256_and_si256(rm, mm));
        }
        if (!_mm256_testz_si256(vacc, vacc)) continue;
        for (; w < nwords; ++w) acc |= row[w] & mask[w];
        if (!acc) return false;
    }
    return true;
}

int best_gain_row_avx2(const uint64_t* rows, int nrows, int nwords,
                       const uint64_t* covered, int* out_gain) {
    int best = -1, best_gain = -1;
    if (nwords == 1) {
        const __m256i vc = _mm256_set1_epi64x(static_cast<long long>(covered[0]));
        alignas(32) uint64_t lane[4];
        int r = 0;
        for (; r + 4 <= nrows; r += 4) {
            __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + r));
            _mm256_store_si256(reinterpret_cast<__m256i*>(lane), _mm256_andnot_si256(vc, v));
            for (int i = 0; i < 4; ++i) {
                int gain = std::popcount(lane[i]);
                if (gain > best_gain) { best_gain = gain; best = r + i; }
            }
        }
        for (; r < nrows; ++r) {
            int gain = std::popcount(rows[r] & ~covered[0]);
            if (gain > best_gain) { best_gain = gain; best = r; }
        }
    } else {
        for (int r = 0; r < nrows; ++r) {
            const uint64_t* row = rows + static_cast<size_t>(r) * nwords;
            int gain = 0;
            for (int w = 0; w < nwords; ++w) gain += std::popcount(row[w] & ~covered[w]);
            if (gain > best_gain) { best_gain = gain; best = r; }
        }
    }
    if (out_gain) *out_gain = best_gain;
    return best;
}

} // namespace

const Ops* avx2_ops_impl() {
    static const Ops ops{find_superset_avx2, all_rows_intersect_avx2,
                         best_gain_row_avx2, "avx2"};
    return &ops;
}

} // namespace clut::kern

#endif // CLUT_HAVE_AVX2
