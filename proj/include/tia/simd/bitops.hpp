#pragma once

// Word-array kernels behind VertexSet. Each kernel has a portable scalar
// reference and, on x86-64, an AVX2 variant compiled in its own translation
// unit. The active table is chosen once at startup from CPUID; setting
// TIA_SIMD=scalar in the environment forces the reference path.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace tia::simd {

using Word = std::uint64_t;

struct BitKernels {
  std::string_view name;
  void (*and_into)(Word* dst, const Word* src, std::size_t n);
  void (*or_into)(Word* dst, const Word* src, std::size_t n);
  // dst &= ~src
  void (*andnot_into)(Word* dst, const Word* src, std::size_t n);
  std::size_t (*popcount)(const Word* src, std::size_t n);
  std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t n);
  bool (*intersects)(const Word* a, const Word* b, std::size_t n);
  // true iff every bit of a is set in b
  bool (*is_subset)(const Word* a, const Word* b, std::size_t n);
};

const BitKernels& scalar_kernels() noexcept;

// nullptr when the build has no AVX2 variant.
const BitKernels* avx2_kernels() noexcept;

bool cpu_has_avx2() noexcept;

const BitKernels& active_kernels() noexcept;

}  // namespace tia::simd
