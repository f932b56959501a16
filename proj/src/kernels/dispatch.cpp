#include <atomic>
#include <cstdlib>
#include <string>

#include "arfspin/errors.hpp"
#include "arfspin/kernels.hpp"

namespace arfspin::kernels {

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(ARFSPIN_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

CountOddFn kernel_for(Isa isa) {
  if (!isa_available(isa)) {
    throw DomainError("kernel ISA not available: " + std::string(to_string(isa)));
  }
#if defined(ARFSPIN_HAVE_AVX2)
  if (isa == Isa::Avx2) return &avx2::count_odd_pairings;
#endif
  return &scalar::count_odd_pairings;
}

namespace {

Isa initial_isa() {
  if (const char* forced = std::getenv("ARFSPIN_ISA"); forced && std::string(forced) == "scalar") {
    return Isa::Scalar;
  }
  return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  kernel_for(isa);  // availability check
  active().store(isa, std::memory_order_relaxed);
}

std::uint64_t count_odd_pairings(std::span<const std::uint32_t> second_tail, std::uint32_t first,
                                 std::uint32_t second_prefix) {
#if defined(ARFSPIN_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return avx2::count_odd_pairings(second_tail, first, second_prefix);
#endif
  return scalar::count_odd_pairings(second_tail, first, second_prefix);
}

}  // namespace arfspin::kernels
