#include <cstdlib>
#include <string_view>

#include "tia/simd/bitops.hpp"

namespace tia::simd {

#if !defined(TIA_HAVE_AVX2)
const BitKernels* avx2_kernels() noexcept { return nullptr; }
#endif

bool cpu_has_avx2() noexcept {
#if defined(TIA_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

const BitKernels& select_kernels() noexcept {
  if (const char* env = std::getenv("TIA_SIMD"); env && std::string_view(env) == "scalar")
    return scalar_kernels();
  if (const BitKernels* k = avx2_kernels(); k != nullptr && cpu_has_avx2()) return *k;
  return scalar_kernels();
}

}  // namespace

const BitKernels& active_kernels() noexcept {
  static const BitKernels& chosen = select_kernels();
  return chosen;
}

}  // namespace tia::simd
