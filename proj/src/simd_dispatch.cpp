#include "cgdl/simd.hpp"

#include <cstdlib>
#include <string_view>

namespace cgdl::simd {

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", &scalar::join, &scalar::multiply};
  return table;
}

const KernelTable* avx2_kernels() {
#if defined(CGDL_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const KernelTable table{"avx2", &avx2::join, &avx2::multiply};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable& selected = [] () -> const KernelTable& {
    const char* forced = std::getenv("CGDL_ISA");
    if (forced != nullptr && std::string_view(forced) == "scalar")
      return scalar_kernels();
    if (const KernelTable* fast = avx2_kernels())
      return *fast;
    return scalar_kernels();
  }();
  return selected;
}

} // namespace cgdl::simd
