#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Matrix kernels over chain lattices, with the carrier stored as one byte
// per level. Rows are padded to `kRowAlign` bytes so vector code never needs
// a scalar tail; padding entries are zero and stay zero under every kernel.

namespace cgdl::simd {

inline constexpr std::size_t kRowAlign = 32;

/// The product of the matrix semiring. Join is always max on levels.
///   min:          seq(a, b) = min(a, b)              (Boolean, Goedel)
///   lukasiewicz:  seq(a, b) = max(0, a + b - top)
enum class Product { min, lukasiewicz };

using JoinFn = void (*)(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
                        std::size_t count);
/// out[i][j] = max_k seq(a[i][k], b[k][j]) for i < rows, k < inner, over the
/// whole padded row of `out`. `b` and `out` share `stride`, which must be a
/// multiple of kRowAlign; `a` rows are `a_stride` bytes apart.
using MultiplyFn = void (*)(const std::uint8_t* a, std::size_t a_stride, const std::uint8_t* b,
                            std::uint8_t* out, std::size_t stride, std::size_t rows,
                            std::size_t inner, Product product, std::uint8_t top);

struct KernelTable {
  std::string_view isa;
  JoinFn join;
  MultiplyFn multiply;
};

namespace scalar {
void join(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out, std::size_t count);
void multiply(const std::uint8_t* a, std::size_t a_stride, const std::uint8_t* b,
              std::uint8_t* out, std::size_t stride, std::size_t rows, std::size_t inner,
              Product product, std::uint8_t top);
} // namespace scalar

#if defined(CGDL_HAVE_AVX2)
namespace avx2 {
// count must be a multiple of kRowAlign.
void join(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out, std::size_t count);
void multiply(const std::uint8_t* a, std::size_t a_stride, const std::uint8_t* b,
              std::uint8_t* out, std::size_t stride, std::size_t rows, std::size_t inner,
              Product product, std::uint8_t top);
} // namespace avx2
#endif

const KernelTable& scalar_kernels();
/// Null when the AVX2 kernels were not built or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

/// The kernels selected for this process: AVX2 when available, unless the
/// environment variable CGDL_ISA=scalar forces the reference path.
const KernelTable& active_kernels();

/// Lukasiewicz kernels add levels in 8 bits; chains above this top use the
/// generic lattice path instead.
inline constexpr std::uint8_t kMaxLukasiewiczTop = 127;

} // namespace cgdl::simd
