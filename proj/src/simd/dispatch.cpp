#include <atomic>

#include "ramseykit/simd.hpp"

namespace rk::simd {

#if defined(RAMSEYKIT_WITH_AVX2)
std::uint64_t and_popcount_avx2(const std::uint64_t*, const std::uint64_t*, std::size_t);
double weighted_product_sum_avx2(const double* const*, int, const double*, std::size_t);
void and_popcount_block_avx2(const std::uint64_t*, std::size_t, int, const std::uint64_t*, std::size_t,
                             int, std::size_t, std::size_t, std::uint64_t*);
#endif
#if defined(RAMSEYKIT_WITH_AVX512)
std::uint64_t and_popcount_avx512(const std::uint64_t*, const std::uint64_t*, std::size_t);
double weighted_product_sum_avx512(const double* const*, int, const double*, std::size_t);
void and_popcount_block_avx512(const std::uint64_t*, std::size_t, int, const std::uint64_t*, std::size_t,
                               int, std::size_t, std::size_t, std::uint64_t*);
#endif

namespace {

Level detect_level() {
#if defined(__x86_64__)
    __builtin_cpu_init();
#if defined(RAMSEYKIT_WITH_AVX512)
    if (__builtin_cpu_supports("avx512f") && __builtin_cpu_supports("avx512vpopcntdq"))
        return Level::avx512;
#endif
#if defined(RAMSEYKIT_WITH_AVX2)
    if (__builtin_cpu_supports("avx2")) return Level::avx2;
#endif
#endif
    return Level::scalar;
}

std::atomic<Level> g_level{detect_level()};
const Level g_cpu_level = detect_level();

}  // namespace

Level active_level() { return g_level.load(std::memory_order_relaxed); }

const char* level_name(Level l) {
    switch (l) {
        case Level::avx512: return "avx512";
        case Level::avx2: return "avx2";
        default: return "scalar";
    }
}

void force_max_level(Level l) {
    Level capped = static_cast<int>(l) < static_cast<int>(g_cpu_level) ? l : g_cpu_level;
    g_level.store(capped, std::memory_order_relaxed);
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    switch (active_level()) {
#if defined(RAMSEYKIT_WITH_AVX512)
        case Level::avx512: return and_popcount_avx512(a, b, n);
#endif
#if defined(RAMSEYKIT_WITH_AVX2)
        case Level::avx2: return and_popcount_avx2(a, b, n);
#endif
        default: break;
    }
    return and_popcount_scalar(a, b, n);
}

void and_popcount_block(const std::uint64_t* xbase, std::size_t xstride, int nx,
                        const std::uint64_t* ybase, std::size_t ystride, int ny, std::size_t w0,
                        std::size_t w1, std::uint64_t* counts) {
    switch (active_level()) {
#if defined(RAMSEYKIT_WITH_AVX512)
        case Level::avx512:
            and_popcount_block_avx512(xbase, xstride, nx, ybase, ystride, ny, w0, w1, counts);
            return;
#endif
#if defined(RAMSEYKIT_WITH_AVX2)
        case Level::avx2:
            and_popcount_block_avx2(xbase, xstride, nx, ybase, ystride, ny, w0, w1, counts);
            return;
#endif
        default: break;
    }
    and_popcount_block_scalar(xbase, xstride, nx, ybase, ystride, ny, w0, w1, counts);
}

double weighted_product_sum(const double* const* rows, int k, const double* w, std::size_t n) {
    switch (active_level()) {
#if defined(RAMSEYKIT_WITH_AVX512)
        case Level::avx512: return weighted_product_sum_avx512(rows, k, w, n);
#endif
#if defined(RAMSEYKIT_WITH_AVX2)
        case Level::avx2: return weighted_product_sum_avx2(rows, k, w, n);
#endif
        default: break;
    }
    return weighted_product_sum_scalar(rows, k, w, n);
}

}  // namespace rk::simd
