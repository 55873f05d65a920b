#include "cgdl/simd.hpp"

#include <algorithm>

namespace cgdl::simd::scalar {

void join(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i)
    out[i] = std::max(a[i], b[i]);
}

void multiply(const std::uint8_t* a, std::size_t a_stride, const std::uint8_t* b,
              std::uint8_t* out, std::size_t stride, std::size_t rows, std::size_t inner,
              Product product, std::uint8_t top) {
  for (std::size_t i = 0; i < rows; ++i) {
    std::uint8_t* row = out + i * stride;
    std::fill(row, row + stride, std::uint8_t{0});
    for (std::size_t k = 0; k < inner; ++k) {
      const unsigned aik = a[i * a_stride + k];
      if (aik == 0)
        continue;
      const std::uint8_t* bk = b + k * stride;
      for (std::size_t j = 0; j < stride; ++j) {
        unsigned term;
        if (product == Product::min) {
          term = std::min<unsigned>(aik, bk[j]);
        } else {
          const unsigned sum = aik + bk[j];
          term = sum > top ? sum - top : 0;
        }
        row[j] = static_cast<std::uint8_t>(std::max<unsigned>(row[j], term));
      }
    }
  }
}

} // namespace cgdl::simd::scalar
