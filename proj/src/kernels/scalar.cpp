#include <bit>

#include "centra/kernels.hpp"

namespace centra::kernels {

namespace {

void equal_mask(const Index* a, const Index* b, std::size_t n, Word* out) {
  const std::size_t words = words_for(n);
  for (std::size_t w = 0; w < words; ++w) {
    const std::size_t base = w * kWordBits;
    const std::size_t len = n - base < kWordBits ? n - base : kWordBits;
    Word m = 0;
    for (std::size_t j = 0; j < len; ++j) m |= Word(a[base + j] == b[base + j]) << j;
    out[w] = m;
  }
}

bool rows_equal(const Index* a, const Index* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::size_t popcount(const Word* a, std::size_t words) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words; ++i) c += static_cast<std::size_t>(std::popcount(a[i]));
  return c;
}

std::size_t and_popcount(const Word* a, const Word* b, std::size_t words) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

void bit_and(const Word* a, const Word* b, Word* out, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) out[i] = a[i] & b[i];
}

void bit_or(const Word* a, const Word* b, Word* out, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) out[i] = a[i] | b[i];
}

void bit_andnot(const Word* a, const Word* b, Word* out, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) out[i] = a[i] & ~b[i];
}

bool is_subset(const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

bool intersects(const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if ((a[i] & b[i]) != 0) return true;
  return false;
}

}  // namespace

const KernelSet& scalar() {
  static const KernelSet set{"scalar",   equal_mask, rows_equal, popcount,   and_popcount,
                             bit_and,    bit_or,     bit_andnot, is_subset,  intersects};
  return set;
}

}  // namespace centra::kernels
