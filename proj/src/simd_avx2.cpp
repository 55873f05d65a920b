#include "cgdl/simd.hpp"

#include <immintrin.h>

namespace cgdl::simd::avx2 {

void join(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out, std::size_t count) {
  for (std::size_t i = 0; i < count; i += 32) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_max_epu8(va, vb));
  }
}

void multiply(const std::uint8_t* a, std::size_t a_stride, const std::uint8_t* b,
              std::uint8_t* out, std::size_t stride, std::size_t rows, std::size_t inner,
              Product product, std::uint8_t top) {
  const __m256i vtop = _mm256_set1_epi8(static_cast<char>(top));
  for (std::size_t i = 0; i < rows; ++i) {
    const std::uint8_t* arow = a + i * a_stride;
    std::uint8_t* row = out + i * stride;
    for (std::size_t j = 0; j < stride; j += 32) {
      __m256i acc = _mm256_setzero_si256();
      for (std::size_t k = 0; k < inner; ++k) {
        if (arow[k] == 0)
          continue;
        const __m256i va = _mm256_set1_epi8(static_cast<char>(arow[k]));
        const __m256i vb =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k * stride + j));
        // Sums stay below 256 because top <= kMaxLukasiewiczTop.
        const __m256i term = product == Product::min
                                 ? _mm256_min_epu8(va, vb)
                                 : _mm256_subs_epu8(_mm256_adds_epu8(va, vb), vtop);
        acc = _mm256_max_epu8(acc, term);
      }
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + j), acc);
    }
  }
}

} // namespace cgdl::simd::avx2
