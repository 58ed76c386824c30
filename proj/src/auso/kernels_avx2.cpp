#include <immintrin.h>

#include "kernels_impl.hpp"

namespace clb::auso::kernels::detail {

void face_sinks_avx2(std::span<const std::uint32_t> outmap, std::uint32_t free, std::span<std::uint32_t> counts) {
  const auto size = static_cast<std::uint32_t>(outmap.size());
  const __m256i vfree = _mm256_set1_epi32(static_cast<int>(free));
  const __m256i zero = _mm256_setzero_si256();
  std::uint32_t v = 0;
  for (; v + 8 <= size; v += 8) {
    __m256i o = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(outmap.data() + v));
    __m256i hit = _mm256_cmpeq_epi32(_mm256_and_si256(o, vfree), zero);
    auto m = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(hit)));
    while (m) {
      unsigned j = static_cast<unsigned>(__builtin_ctz(m));
      ++counts[(v + j) & ~free];
      m &= m - 1;
    }
  }
  for (; v < size; ++v)
    if ((outmap[v] & free) == 0) ++counts[v & ~free];
}

std::uint64_t pair_violations_avx2(std::span<const std::uint32_t> outmap) {
  std::uint64_t bad = 0;
  const auto size = static_cast<std::uint32_t>(outmap.size());
  const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i zero = _mm256_setzero_si256();
  for (std::uint32_t u = 0; u < size; ++u) {
    const std::uint32_t su = outmap[u];
    std::uint32_t v = u + 1;
    for (; v < size && (v & 7u); ++v) bad += ((u ^ v) & (su ^ outmap[v])) == 0;
    const __m256i vu = _mm256_set1_epi32(static_cast<int>(u));
    const __m256i vsu = _mm256_set1_epi32(static_cast<int>(su));
    for (; v + 8 <= size; v += 8) {
      __m256i idx = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(v)), lane);
      __m256i o = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(outmap.data() + v));
      __m256i x = _mm256_and_si256(_mm256_xor_si256(idx, vu), _mm256_xor_si256(o, vsu));
      __m256i z = _mm256_cmpeq_epi32(x, zero);
      bad += static_cast<std::uint64_t>(__builtin_popcount(static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(z)))));
    }
    for (; v < size; ++v) bad += ((u ^ v) & (su ^ outmap[v])) == 0;
  }
  return bad;
}

}  // namespace clb::auso::kernels::detail
