#include "ramseykit/simd.hpp"

namespace rk::simd {

std::uint64_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += static_cast<std::uint64_t>(__builtin_popcountll(a[i] & b[i]));
    return acc;
}

void and_popcount_block_scalar(const std::uint64_t* xbase, std::size_t xstride, int nx,
                               const std::uint64_t* ybase, std::size_t ystride, int ny,
                               std::size_t w0, std::size_t w1, std::uint64_t* counts) {
    for (int ix = 0; ix < nx; ++ix) {
        const std::uint64_t* xr = xbase + static_cast<std::size_t>(ix) * xstride;
        for (int iy = 0; iy < ny; ++iy) {
            const std::uint64_t* yr = ybase + static_cast<std::size_t>(iy) * ystride;
            std::uint64_t acc = 0;
            for (std::size_t w = w0; w < w1; ++w)
                acc += static_cast<std::uint64_t>(__builtin_popcountll(xr[w] & yr[w]));
            counts[static_cast<std::size_t>(ix) * ny + iy] += acc;
        }
    }
}

double weighted_product_sum_scalar(const double* const* rows, int k, const double* w, std::size_t n) {
    double acc = 0.0;
    switch (k) {
        case 1:
            for (std::size_t y = 0; y < n; ++y) acc += w[y] * rows[0][y];
            return acc;
        case 2:
            for (std::size_t y = 0; y < n; ++y) acc += w[y] * rows[0][y] * rows[1][y];
            return acc;
        default:
            for (std::size_t y = 0; y < n; ++y) {
                double p = rows[0][y];
                for (int i = 1; i < k; ++i) p *= rows[i][y];
                acc += w[y] * p;
            }
            return acc;
    }
}

}  // namespace rk::simd
