#pragma once

// Inner loop of the brute-force tally.
//
// A value set on the closed surface is a list of g handle pairs (x_i, y_i).
// Its Arf parity is sum (1 - x_i)(1 - y_i) mod 2, and a term is odd exactly
// when both x_i and y_i are even. With bit i of `first` set iff x_i is even
// and bit i of `second` set iff y_i is even, the parity is
// popcount(first & second) mod 2.
//
// The tally fixes everything except the bridge values, so the kernel sees one
// `first` mask, a shared prefix of the `second` mask, and one table entry per
// bridge tuple.

#include <cstdint>
#include <span>
#include <string_view>

namespace arfspin::kernels {

/// Number of t with popcount(first & (second_prefix | second_tail[t])) odd.
using CountOddFn = std::uint64_t (*)(std::span<const std::uint32_t> second_tail,
                                     std::uint32_t first, std::uint32_t second_prefix);

namespace scalar {
std::uint64_t count_odd_pairings(std::span<const std::uint32_t> second_tail, std::uint32_t first,
                                 std::uint32_t second_prefix);
}

#if defined(ARFSPIN_HAVE_AVX2)
namespace avx2 {
std::uint64_t count_odd_pairings(std::span<const std::uint32_t> second_tail, std::uint32_t first,
                                 std::uint32_t second_prefix);
}
#endif

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// Whether the running CPU and this build both support the given ISA.
bool isa_available(Isa isa);

/// ISA used by count_odd_pairings(). Chosen from the CPU on first use;
/// ARFSPIN_ISA=scalar in the environment forces the reference kernel.
Isa active_isa();

/// Switches the dispatched kernel (tests use this to run the same tally on
/// every ISA). Throws DomainError if the ISA is unavailable.
void set_active_isa(Isa isa);

/// Dispatched kernel.
std::uint64_t count_odd_pairings(std::span<const std::uint32_t> second_tail, std::uint32_t first,
                                 std::uint32_t second_prefix);

/// Kernel for a specific ISA. Throws DomainError if it is unavailable.
CountOddFn kernel_for(Isa isa);

}  // namespace arfspin::kernels
