#pragma once

/// Data-parallel inner loops used by the centralizer and subgroup code.
///
/// Every kernel exists as a portable scalar reference and, where the build
/// and the CPU allow it, as an AVX2 variant. `active()` returns the set
/// chosen at first use: the environment variable `CENTRA_SIMD` may force
/// `scalar` or `avx2`, otherwise the widest supported set wins. All variants
/// are required to agree bit for bit with the scalar reference.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace centra::kernels {

using Word = std::uint64_t;
using Index = std::uint32_t;

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

struct KernelSet {
  std::string_view name;

  /// Writes words_for(n) words; bit i is set iff a[i] == b[i]. Padding bits are zero.
  void (*equal_mask)(const Index* a, const Index* b, std::size_t n, Word* out);
  bool (*rows_equal)(const Index* a, const Index* b, std::size_t n);

  std::size_t (*popcount)(const Word* a, std::size_t words);
  std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t words);
  void (*bit_and)(const Word* a, const Word* b, Word* out, std::size_t words);
  void (*bit_or)(const Word* a, const Word* b, Word* out, std::size_t words);
  /// out = a & ~b
  void (*bit_andnot)(const Word* a, const Word* b, Word* out, std::size_t words);
  /// a ⊆ b
  bool (*is_subset)(const Word* a, const Word* b, std::size_t words);
  bool (*intersects)(const Word* a, const Word* b, std::size_t words);
};

const KernelSet& scalar();

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelSet* avx2();

/// Every kernel set usable on this machine, scalar first.
std::vector<const KernelSet*> available();

const KernelSet& active();

/// Forces a kernel set by name ("scalar", "avx2" or "auto"). Throws OutOfRange
/// for an unknown or unavailable name. Not meant to race with running kernels.
void select(std::string_view name);

}  // namespace centra::kernels
