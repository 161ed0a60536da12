#include "clut/kernels.hpp"

#include <atomic>
#include <cstdlib>

namespace clut::kern {

#ifdef CLUT_HAVE_AVX2
const Ops* avx2_ops_impl();
#endif

const Ops* avx2_ops() {
#ifdef CLUT_HAVE_AVX2
    static const bool supported = __builtin_cpu_supports("avx2");
    if (supported) return avx2_ops_impl();
#endif
    return nullptr;
}

namespace {
std::atomic<bool> g_force_scalar{false};

bool env_disabled() {
    static const bool disabled = [] {
        const char* v = std::getenv("CLUT_NO_AVX2");
        return v && v[0] && v[0] != '0';
    }();
    return disabled;
}
} // namespace

void force_scalar(bool on) { g_force_scalar.store(on, std::memory_order_relaxed); }

const Ops& ops() {
    if (!g_force_scalar.load(std::memory_order_relaxed) && !env_disabled()) {
        if (const Ops* v = avx2_ops()) return *v;
    }
    return scalar_ops();
}

} // namespace clut::kern
