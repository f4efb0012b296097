#if defined(__x86_64__)

#include <immintrin.h>

#include "ramseykit/simd.hpp"

namespace rk::simd {

std::uint64_t and_popcount_avx512(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    __m512i acc = _mm512_setzero_si512();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m512i va = _mm512_loadu_si512(a + i);
        __m512i vb = _mm512_loadu_si512(b + i);
        acc = _mm512_add_epi64(acc, _mm512_popcnt_epi64(_mm512_and_si512(va, vb)));
    }
    std::uint64_t total = _mm512_reduce_add_epi64(acc);
    for (; i < n; ++i) total += static_cast<std::uint64_t>(__builtin_popcountll(a[i] & b[i]));
    return total;
}

void and_popcount_block_avx512(const std::uint64_t* xbase, std::size_t xstride, int nx,
                               const std::uint64_t* ybase, std::size_t ystride, int ny,
                               std::size_t w0, std::size_t w1, std::uint64_t* counts) {
    // Register tile of four x rows per y row: each 64-byte y load feeds four
    // AND+POPCNT accumulators, cutting load-port pressure well below the
    // two-loads-per-op naive form.
    int ix = 0;
    for (; ix + 4 <= nx; ix += 4) {
        const std::uint64_t* x0 = xbase + static_cast<std::size_t>(ix) * xstride;
        const std::uint64_t* x1 = x0 + xstride;
        const std::uint64_t* x2 = x1 + xstride;
        const std::uint64_t* x3 = x2 + xstride;
        for (int iy = 0; iy < ny; ++iy) {
            const std::uint64_t* yr = ybase + static_cast<std::size_t>(iy) * ystride;
            __m512i a0 = _mm512_setzero_si512(), a1 = a0, a2 = a0, a3 = a0;
            std::size_t w = w0;
            for (; w + 8 <= w1; w += 8) {
                __m512i yv = _mm512_loadu_si512(yr + w);
                a0 = _mm512_add_epi64(a0, _mm512_popcnt_epi64(_mm512_and_si512(_mm512_loadu_si512(x0 + w), yv)));
                a1 = _mm512_add_epi64(a1, _mm512_popcnt_epi64(_mm512_and_si512(_mm512_loadu_si512(x1 + w), yv)));
                a2 = _mm512_add_epi64(a2, _mm512_popcnt_epi64(_mm512_and_si512(_mm512_loadu_si512(x2 + w), yv)));
                a3 = _mm512_add_epi64(a3, _mm512_popcnt_epi64(_mm512_and_si512(_mm512_loadu_si512(x3 + w), yv)));
            }
            std::uint64_t t0 = _mm512_reduce_add_epi64(a0);
            std::uint64_t t1 = _mm512_reduce_add_epi64(a1);
            std::uint64_t t2 = _mm512_reduce_add_epi64(a2);
            std::uint64_t t3 = _mm512_reduce_add_epi64(a3);
            for (; w < w1; ++w) {
                std::uint64_t yw = yr[w];
                t0 += static_cast<std::uint64_t>(__builtin_popcountll(x0[w] & yw));
                t1 += static_cast<std::uint64_t>(__builtin_popcountll(x1[w] & yw));
                t2 += static_cast<std::uint64_t>(__builtin_popcountll(x2[w] & yw));
                t3 += static_cast<std::uint64_t>(__builtin_popcountll(x3[w] & yw));
            }
            std::uint64_t* c = counts + static_cast<std::size_t>(ix) * ny + iy;
            c[0] += t0;
            c[static_cast<std::size_t>(ny)] += t1;
            c[static_cast<std::size_t>(2) * ny] += t2;
            c[static_cast<std::size_t>(3) * ny] += t3;
        }
    }
    for (; ix < nx; ++ix) {
        const std::uint64_t* xr = xbase + static_cast<std::size_t>(ix) * xstride;
        for (int iy = 0; iy < ny; ++iy) {
            const std::uint64_t* yr = ybase + static_cast<std::size_t>(iy) * ystride;
            __m512i acc = _mm512_setzero_si512();
            std::size_t w = w0;
            for (; w + 8 <= w1; w += 8) {
                __m512i yv = _mm512_loadu_si512(yr + w);
                acc = _mm512_add_epi64(acc, _mm512_popcnt_epi64(_mm512_and_si512(_mm512_loadu_si512(xr + w), yv)));
            }
            std::uint64_t total = _mm512_reduce_add_epi64(acc);
            for (; w < w1; ++w) total += static_cast<std::uint64_t>(__builtin_popcountll(xr[w] & yr[w]));
            counts[static_cast<std::size_t>(ix) * ny + iy] += total;
        }
    }
}

double weighted_product_sum_avx512(const double* const* rows, int k, const double* w, std::size_t n) {
    __m512d acc = _mm512_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m512d p = _mm512_loadu_pd(rows[0] + i);
        for (int r = 1; r < k; ++r) p = _mm512_mul_pd(p, _mm512_loadu_pd(rows[r] + i));
        acc = _mm512_fmadd_pd(_mm512_loadu_pd(w + i), p, acc);
    }
    double total = _mm512_reduce_add_pd(acc);
    for (; i < n; ++i) {
        double p = rows[0][i];
        for (int r = 1; r < k; ++r) p *= rows[r][i];
        total += w[i] * p;
    }
    return total;
}

}  // namespace rk::simd

#endif  // __x86_64__
