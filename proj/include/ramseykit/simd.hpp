#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

// Data-parallel inner loops behind the density and codegree engines.
// Scalar reference kernels are always built; AVX2 / AVX512-VPOPCNTDQ
// variants are compiled on x86-64 and selected once at startup from CPUID.
// The dispatched and scalar paths are equivalence-tested against each other.
namespace rk::simd {

enum class Level { scalar = 0, avx2 = 1, avx512 = 2 };

Level active_level();
const char* level_name(Level l);
// Clamp dispatch to at most `l` (testing hook; never raises above CPU support).
void force_max_level(Level l);

// popcount(a & b) over n words: the codegree of two bitset rows.
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
std::uint64_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);

// Tiled pairwise variant for the all-pairs codegree scan:
//   counts[ix*ny + iy] += sum over w in [w0,w1) popcount(x_ix[w] & y_iy[w])
// with rows x_i = xbase + i*stride, y_j = ybase + j*stride. Callers size the
// tiles so both row blocks sit in L1.
void and_popcount_block(const std::uint64_t* xbase, std::size_t xstride, int nx,
                        const std::uint64_t* ybase, std::size_t ystride, int ny, std::size_t w0,
                        std::size_t w1, std::uint64_t* counts);
void and_popcount_block_scalar(const std::uint64_t* xbase, std::size_t xstride, int nx,
                               const std::uint64_t* ybase, std::size_t ystride, int ny,
                               std::size_t w0, std::size_t w1, std::uint64_t* counts);

// sum_y w[y] * rows[0][y] * ... * rows[k-1][y]: the innermost reduction of
// the step-kernel density enumeration and of codegree evaluation.
double weighted_product_sum(const double* const* rows, int k, const double* w, std::size_t n);
double weighted_product_sum_scalar(const double* const* rows, int k, const double* w, std::size_t n);

}  // namespace rk::simd
