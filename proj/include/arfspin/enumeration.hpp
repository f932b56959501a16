#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "arfspin/arf.hpp"
#include "arfspin/bigint.hpp"
#include "arfspin/topology.hpp"

namespace arfspin {

/// Pull-style generator of all real m-Arf functions for one decomposition.
///
/// Coordinates, most significant first: alpha, beta, the free oval values,
/// the derived oval value (eps = 0, k >= 1), the zero twist values, delta.
/// Free oval values range over the half periods {0, m/2} (just {0} for odd
/// m); everything else ranges over [0, m). Each candidate is passed through
/// validate_real_value_set, so an inadmissible genus yields nothing.
class RealArfStream {
 public:
  /// Throws DomainError if n is not admissible for the type.
  RealArfStream(const TopologicalType& type, SpinModulus m, std::optional<int> n = std::nullopt);

  std::optional<RealArfFunction> next();

  const Decomposition& decomposition() const { return decomp_; }

 private:
  bool advance();
  ArfValueSet current() const;

  Decomposition decomp_;
  SpinModulus m_;
  std::vector<int> half_periods_;
  // Odometer digits and their radices; digit i of a free oval indexes half_periods_.
  std::vector<int> digits_;
  std::vector<int> radix_;
  int free_ovals_ = 0;
  bool exhausted_ = false;
};

struct Tally {
  BigInt total;
  BigInt even;
  BigInt odd;
  BigInt candidates;  // size of the raw value-set space that was examined
  std::array<BigInt, kValidationCodeCount> rejected_by{};  // indexed by Validation

  Tally& operator+=(const Tally& other);
  friend bool operator==(const Tally&, const Tally&) = default;
};

/// Drains the stream; rejected_by stays zero because the stream never
/// produces rejected candidates.
Tally tally_stream(RealArfStream& stream);

/// Number of real m-Arf functions on a surface of the given type with Arf
/// invariant delta, following the six-case table:
///   m odd:                 m^g if g = 1 (mod m) and delta = 0
///   m even, eps = 0, k = 0: m^g / 2
///   m even, eps = 0, k >= 1: m^g 2^(k-2)
///   eps = 1, m = 0 (mod 4): m^g 2^(k-2)
///   eps = 1, m = 2 (mod 4): (m^g / 2)(2^(k-1) + 1) for delta = 0, (2^(k-1) - 1) for delta = 1
/// and 0 whenever g != 1 (mod m/2) for even m.
BigInt closed_form_count(const TopologicalType& type, SpinModulus m, int delta);

/// Exhaustive tally over the full candidate space: alpha, beta, delta over
/// [0, m) and every curve value over [0, m). Curve-value tuples go through
/// validate_real_value_set; accepted ones are expanded and their Arf
/// invariants counted from the closed-surface handle parity. The space is
/// partitioned across `threads` workers; the merged result does not depend
/// on the thread count.
Tally brute_force_tally(const TopologicalType& type, SpinModulus m, std::optional<int> n,
                        unsigned threads);

struct CountReport {
  TopologicalType type;
  int m;
  int n_used;
  BigInt total;
  BigInt even_count;
  BigInt odd_count;
  BigInt closed_form_even;
  BigInt closed_form_odd;
  bool match = false;
  Tally tally;
};

CountReport brute_force_counts(const TopologicalType& type, SpinModulus m,
                               std::optional<int> n = std::nullopt, unsigned threads = 1);

/// n values checked by verify_range: every admissible n >= 2, and n = k = 1
/// for the separating one-oval type, which has no other decomposition.
std::vector<int> verification_n_values(const TopologicalType& type);

/// One report per (g, k, eps, m, n) cell with 2 <= g <= g_max, 2 <= m <= m_max,
/// sorted by that key. Throws DomainError if g_max < 2 or m_max < 2.
std::vector<CountReport> verify_range(int g_max, int m_max, unsigned threads);

/// ARFSPIN_THREADS if set to a positive integer, else the hardware concurrency.
unsigned default_thread_count();

}  // namespace arfspin
