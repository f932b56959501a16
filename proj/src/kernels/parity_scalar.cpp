#include <bit>

#include "arfspin/kernels.hpp"

namespace arfspin::kernels::scalar {

std::uint64_t count_odd_pairings(std::span<const std::uint32_t> second_tail, std::uint32_t first,
                                 std::uint32_t second_prefix) {
  std::uint64_t odd = 0;
  for (std::uint32_t tail : second_tail) {
    odd += static_cast<std::uint64_t>(std::popcount(first & (second_prefix | tail)) & 1);
  }
  return odd;
}

}  // namespace arfspin::kernels::scalar
