#if defined(__x86_64__)

#include <immintrin.h>

#include "ramseykit/simd.hpp"

namespace rk::simd {

namespace {

// Nibble-LUT popcount of one 256-bit lane, accumulated as 4x u64 via SAD.
inline __m256i popcount256(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

}  // namespace

std::uint64_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcount256(_mm256_and_si256(va, vb)));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) total += static_cast<std::uint64_t>(__builtin_popcountll(a[i] & b[i]));
    return total;
}

void and_popcount_block_avx2(const std::uint64_t* xbase, std::size_t xstride, int nx,
                             const std::uint64_t* ybase, std::size_t ystride, int ny, std::size_t w0,
                             std::size_t w1, std::uint64_t* counts) {
    for (int ix = 0; ix < nx; ++ix) {
        const std::uint64_t* xr = xbase + static_cast<std::size_t>(ix) * xstride;
        for (int iy = 0; iy < ny; ++iy) {
            const std::uint64_t* yr = ybase + static_cast<std::size_t>(iy) * ystride;
            __m256i acc = _mm256_setzero_si256();
            std::size_t w = w0;
            for (; w + 4 <= w1; w += 4) {
                __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(xr + w));
                __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(yr + w));
                acc = _mm256_add_epi64(acc, popcount256(_mm256_and_si256(va, vb)));
            }
            alignas(32) std::uint64_t lanes[4];
            _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
            std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
            for (; w < w1; ++w) total += static_cast<std::uint64_t>(__builtin_popcountll(xr[w] & yr[w]));
            counts[static_cast<std::size_t>(ix) * ny + iy] += total;
        }
    }
}

double weighted_product_sum_avx2(const double* const* rows, int k, const double* w, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d p = _mm256_loadu_pd(rows[0] + i);
        for (int r = 1; r < k; ++r) p = _mm256_mul_pd(p, _mm256_loadu_pd(rows[r] + i));
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), p, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) {
        double p = rows[0][i];
        for (int r = 1; r < k; ++r) p *= rows[r][i];
        total += w[i] * p;
    }
    return total;
}

}  // namespace rk::simd

#endif  // __x86_64__
