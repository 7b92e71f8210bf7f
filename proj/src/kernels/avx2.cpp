// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.
#include <immintrin.h>

#include <bit>

#include "centra/kernels.hpp"

namespace centra::kernels {

namespace {

inline __m256i load(const void* p) { return _mm256_loadu_si256(static_cast<const __m256i*>(p)); }

inline unsigned eq8(const Index* a, const Index* b) {
  const __m256i eq = _mm256_cmpeq_epi32(load(a), load(b));
  return static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq)));
}

void equal_mask(const Index* a, const Index* b, std::size_t n, Word* out) {
  std::size_t w = 0;
  std::size_t i = 0;
  for (; i + kWordBits <= n; i += kWordBits, ++w) {
    Word m = 0;
    for (std::size_t j = 0; j < kWordBits; j += 8) m |= Word(eq8(a + i + j, b + i + j)) << j;
    out[w] = m;
  }
  if (i < n) {
    Word m = 0;
    std::size_t j = 0;
    for (; i + j + 8 <= n; j += 8) m |= Word(eq8(a + i + j, b + i + j)) << j;
    for (; i + j < n; ++j) m |= Word(a[i + j] == b[i + j]) << j;
    out[w] = m;
  }
}

bool rows_equal(const Index* a, const Index* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8)
    if (eq8(a + i, b + i) != 0xffu) return false;
  for (; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

// Nibble-lookup population count (Mula); sums bytes with SAD into four 64-bit lanes.
inline __m256i popcount256(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline std::size_t hsum(__m256i acc) {
  return static_cast<std::size_t>(_mm256_extract_epi64(acc, 0) + _mm256_extract_epi64(acc, 1) +
                                  _mm256_extract_epi64(acc, 2) + _mm256_extract_epi64(acc, 3));
}

std::size_t popcount(const Word* a, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) acc = _mm256_add_epi64(acc, popcount256(load(a + i)));
  std::size_t c = hsum(acc);
  for (; i < words; ++i) c += static_cast<std::size_t>(std::popcount(a[i]));
  return c;
}

std::size_t and_popcount(const Word* a, const Word* b, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4)
    acc = _mm256_add_epi64(acc, popcount256(_mm256_and_si256(load(a + i), load(b + i))));
  std::size_t c = hsum(acc);
  for (; i < words; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

void bit_and(const Word* a, const Word* b, Word* out, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4)
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_and_si256(load(a + i), load(b + i)));
  for (; i < words; ++i) out[i] = a[i] & b[i];
}

void bit_or(const Word* a, const Word* b, Word* out, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4)
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_or_si256(load(a + i), load(b + i)));
  for (; i < words; ++i) out[i] = a[i] | b[i];
}

void bit_andnot(const Word* a, const Word* b, Word* out, std::size_t words) {
  std::size_t i = 0;
  // _mm256_andnot_si256(x, y) computes ~x & y
  for (; i + 4 <= words; i += 4)
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_andnot_si256(load(b + i), load(a + i)));
  for (; i < words; ++i) out[i] = a[i] & ~b[i];
}

bool is_subset(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  // testc(x, y) == 1 iff (~x & y) == 0
  for (; i + 4 <= words; i += 4)
    if (!_mm256_testc_si256(load(b + i), load(a + i))) return false;
  for (; i < words; ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

bool intersects(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4)
    if (!_mm256_testz_si256(load(a + i), load(b + i))) return true;
  for (; i < words; ++i)
    if ((a[i] & b[i]) != 0) return true;
  return false;
}

}  // namespace

const KernelSet& avx2_set() {
  static const KernelSet set{"avx2",     equal_mask, rows_equal, popcount,  and_popcount,
                             bit_and,    bit_or,     bit_andnot, is_subset, intersects};
  return set;
}

}  // namespace centra::kernels
