// Built with -mavx2; only reached through the dispatcher after a CPU check.

#include <immintrin.h>

#include <bit>

#include "arfspin/kernels.hpp"

namespace arfspin::kernels::avx2 {

namespace {

// Parity of each 32-bit lane, as 0 or 1.
inline __m256i lane_parity(__m256i x) {
  x = _mm256_xor_si256(x, _mm256_srli_epi32(x, 16));
  x = _mm256_xor_si256(x, _mm256_srli_epi32(x, 8));
  x = _mm256_xor_si256(x, _mm256_srli_epi32(x, 4));
  x = _mm256_xor_si256(x, _mm256_srli_epi32(x, 2));
  x = _mm256_xor_si256(x, _mm256_srli_epi32(x, 1));
  return _mm256_and_si256(x, _mm256_set1_epi32(1));
}

inline std::uint64_t horizontal_sum(__m256i acc) {
  alignas(32) std::uint32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t sum = 0;
  for (std::uint32_t lane : lanes) sum += lane;
  return sum;
}

}  // namespace

std::uint64_t count_odd_pairings(std::span<const std::uint32_t> second_tail, std::uint32_t first,
                                 std::uint32_t second_prefix) {
  constexpr std::size_t kLanes = 8;
  // Per-lane counters are flushed before they can wrap.
  constexpr std::size_t kFlushEvery = std::size_t{1} << 30;

  const __m256i vfirst = _mm256_set1_epi32(static_cast<int>(first));
  const __m256i vprefix = _mm256_set1_epi32(static_cast<int>(second_prefix));
  const std::uint32_t* data = second_tail.data();
  const std::size_t size = second_tail.size();

  std::uint64_t odd = 0;
  __m256i acc = _mm256_setzero_si256();
  std::size_t since_flush = 0;
  std::size_t i = 0;
  for (; i + kLanes <= size; i += kLanes) {
    const __m256i tail = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
    const __m256i bits = _mm256_and_si256(vfirst, _mm256_or_si256(vprefix, tail));
    acc = _mm256_add_epi32(acc, lane_parity(bits));
    if (++since_flush == kFlushEvery) {
      odd += horizontal_sum(acc);
      acc = _mm256_setzero_si256();
      since_flush = 0;
    }
  }
  odd += horizontal_sum(acc);
  for (; i < size; ++i) {
    odd += static_cast<std::uint64_t>(std::popcount(first & (second_prefix | data[i])) & 1);
  }
  return odd;
}

}  // namespace arfspin::kernels::avx2
