#include "doctest.h"

#include "cgdl/simd.hpp"

#include <cstdint>
#include <random>
#include <vector>

using namespace cgdl::simd;

namespace {

std::vector<std::uint8_t> random_levels(std::size_t n, std::uint8_t top, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, top);
  std::vector<std::uint8_t> out(n);
  for (auto& x : out)
    x = static_cast<std::uint8_t>(d(rng));
  return out;
}

// Zero the padding columns of a rows x stride buffer.
void clear_padding(std::vector<std::uint8_t>& m, std::size_t rows, std::size_t cols,
                   std::size_t stride) {
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = cols; j < stride; ++j)
      m[i * stride + j] = 0;
}

std::size_t padded(std::size_t n) { return (n + kRowAlign - 1) / kRowAlign * kRowAlign; }

} // namespace

TEST_SUITE("simd") {

TEST_CASE("scalar multiply on a small example") {
  // Goedel 3-chain, levels 0..2.
  const std::size_t stride = kRowAlign;
  std::vector<std::uint8_t> a(2 * stride, 0), b(2 * stride, 0), out(2 * stride, 9);
  a[0] = 2; a[1] = 1;
  a[stride + 0] = 0; a[stride + 1] = 2;
  b[0] = 1; b[1] = 0;
  b[stride + 0] = 2; b[stride + 1] = 2;
  scalar::multiply(a.data(), stride, b.data(), out.data(), stride, 2, 2, Product::min, 2);
  CHECK(out[0] == 1);
  CHECK(out[1] == 1);
  CHECK(out[stride + 0] == 2);
  CHECK(out[stride + 1] == 2);
  CHECK(out[5] == 0);
}

TEST_CASE("lukasiewicz product saturates at zero") {
  const std::size_t stride = kRowAlign;
  std::vector<std::uint8_t> a(stride, 0), b(stride, 0), out(stride, 0);
  a[0] = 7;
  b[0] = 5;
  b[1] = 2;
  scalar::multiply(a.data(), stride, b.data(), out.data(), stride, 1, 1, Product::lukasiewicz, 10);
  CHECK(out[0] == 2);
  CHECK(out[1] == 0);
}

TEST_CASE("active kernels are one of the known tables") {
  const KernelTable& k = active_kernels();
  CHECK((k.isa == "scalar" || k.isa == "avx2"));
  if (avx2_kernels() == nullptr)
    CHECK(k.isa == "scalar");
}

TEST_CASE("avx2 and scalar kernels agree") {
  const KernelTable* fast = avx2_kernels();
  if (fast == nullptr) {
    MESSAGE("AVX2 kernels unavailable; skipping");
    return;
  }
  const KernelTable& ref = scalar_kernels();
  std::mt19937_64 rng(20240607);

  for (std::size_t count : {32u, 64u, 96u, 256u, 1024u}) {
    const auto a = random_levels(count, 255, rng);
    const auto b = random_levels(count, 255, rng);
    std::vector<std::uint8_t> x(count), y(count);
    ref.join(a.data(), b.data(), x.data(), count);
    fast->join(a.data(), b.data(), y.data(), count);
    CHECK(x == y);
  }

  struct Shape { std::size_t rows, inner, cols; };
  for (const Shape s : {Shape{1, 1, 1}, Shape{3, 3, 3}, Shape{5, 7, 2}, Shape{17, 33, 40},
                        Shape{31, 1, 64}, Shape{64, 64, 64}, Shape{100, 13, 70}}) {
    for (const auto product : {Product::min, Product::lukasiewicz}) {
      for (std::uint8_t top : {std::uint8_t{1}, std::uint8_t{2}, std::uint8_t{10},
                               kMaxLukasiewiczTop}) {
        const std::size_t a_stride = s.inner + 3;
        const std::size_t stride = padded(s.cols);
        auto a = random_levels(s.rows * a_stride, top, rng);
        auto b = random_levels(s.inner * stride, top, rng);
        clear_padding(b, s.inner, s.cols, stride);
        std::vector<std::uint8_t> x(s.rows * stride, 0), y(s.rows * stride, 0);
        ref.multiply(a.data(), a_stride, b.data(), x.data(), stride, s.rows, s.inner, product, top);
        fast->multiply(a.data(), a_stride, b.data(), y.data(), stride, s.rows, s.inner, product,
                       top);
        CHECK_MESSAGE(x == y, "rows=" << s.rows << " inner=" << s.inner << " cols=" << s.cols
                                      << " top=" << int(top));
        for (std::size_t i = 0; i < s.rows; ++i)
          for (std::size_t j = s.cols; j < stride; ++j)
            REQUIRE(y[i * stride + j] == 0);
      }
    }
  }
}

}
