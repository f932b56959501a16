#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "arfspin/errors.hpp"
#include "arfspin/topology.hpp"

namespace arfspin {

/// The spin modulus m >= 2 (an m-spin structure has L^m = cotangent bundle).
class SpinModulus {
 public:
  explicit SpinModulus(int m);

  int value() const { return m_; }
  bool even() const { return m_ % 2 == 0; }
  /// Canonical representative of x in [0, m).
  int reduce(long long x) const;
  /// Whether 2x = 0 (mod m), i.e. x is 0 or m/2.
  bool is_half_period(int residue) const;

  friend bool operator==(SpinModulus, SpinModulus) = default;

 private:
  int m_;
};

/// Values of a real m-Arf function on a symmetric generating set
///   (a_1, b_1, ..., a_h, b_h, a'_1, b'_1, ..., c_1, ..., c_{n-1}, d_1, ..., d_{n-1})
/// with h = half_genus. Values on the primed handle curves equal the unprimed
/// ones and are not stored. All residues are canonical, in [0, m).
struct ArfValueSet {
  Decomposition decomp;
  SpinModulus m;
  std::vector<int> alpha;  // sigma(a_i), size h
  std::vector<int> beta;   // sigma(b_i), size h
  std::vector<int> gamma;  // sigma(c_1..c_{n-1})
  std::vector<int> delta;  // sigma(d_1..d_{n-1}), d_i a bridge from c_i to c_n

  friend bool operator==(const ArfValueSet&, const ArfValueSet&) = default;
};

struct RealArfFunction {
  ArfValueSet values;
  int gamma_n = 0;        // sigma(c_n), derived
  int arf_invariant = 0;  // 0 = even, 1 = odd; always 0 for odd m

  friend bool operator==(const RealArfFunction&, const RealArfFunction&) = default;
};

enum class Validation {
  Ok,
  GenusInadmissible,
  OvalValueNotHalfPeriod,
  TwistValueNonzero,
  SumConstraintViolated,
};

inline constexpr int kValidationCodeCount = 5;

std::string_view to_string(Validation v);

/// Thrown by complete() when the value set is not the shadow of a real Arf function.
class ValidationFailure : public DomainError {
 public:
  explicit ValidationFailure(Validation code);
  Validation code() const { return code_; }

 private:
  Validation code_;
};

/// Necessary condition for real m-Arf functions to exist in genus g:
/// g = 1 (mod m) for odd m, g = 1 (mod m/2) for even m.
bool spin_admissible(int g, SpinModulus m);

/// Throws DomainError if list lengths do not match the decomposition or a
/// residue lies outside [0, m).
void check_structure(const ArfValueSet& v);

/// Decides whether the value set belongs to a real m-Arf function.
///
/// Checks, in order: genus admissibility; oval values in {0, m/2}; twist
/// values zero; and for non-separating surfaces the oval sum
/// gamma_1 + ... + gamma_k = 1 - g (mod m), with the stored gamma_k
/// cross-checked against the value that sum forces. With k = 0 the sum is
/// empty and the condition reads 0 = 1 - g (mod m).
Validation validate_real_value_set(const ArfValueSet& v);

/// sigma(c_n) = (1 - g) - (gamma_1 + ... + gamma_{n-1}) (mod m).
int derived_gamma_n(const ArfValueSet& v);

/// Validates and fills in sigma(c_n) and the Arf invariant.
RealArfFunction complete(ArfValueSet v);

/// Arf invariant from the bridge values: sum_{i<n} (1 - gamma_i)(1 - delta_i)
/// mod 2 on canonical representatives; 0 for odd m.
int arf_invariant_symmetric(const ArfValueSet& v);

/// Sum condition for an m-Arf function on a genus-g surface with n holes:
/// gamma_1 + ... + gamma_n = (2 - 2g) - n (mod m).
bool validate_hole_values(int g, SpinModulus m, std::span<const int> alpha,
                          std::span<const int> beta, std::span<const int> gamma);

struct ArfInvariantOutcome {
  enum class Kind { Zero, One, Divisor };
  Kind kind = Kind::Zero;
  int divisor = 0;  // only for Kind::Divisor (genus 1)

  static ArfInvariantOutcome zero() { return {Kind::Zero, 0}; }
  static ArfInvariantOutcome one() { return {Kind::One, 0}; }
  static ArfInvariantOutcome gcd(int d) { return {Kind::Divisor, d}; }

  friend bool operator==(const ArfInvariantOutcome&, const ArfInvariantOutcome&) = default;
};

/// Arf invariant of the m-Arf function on a genus-g surface with holes taking
/// the given values on a standard generating set.
///
///   g >= 2, m odd                      -> Zero
///   g >= 2, m even, some gamma_i even  -> Zero
///   g >= 2, m even, all gamma_i odd    -> parity of sum (1 - alpha_i)(1 - beta_i)
///   g = 1                              -> gcd(m, alpha_1, beta_1, gamma_i + 1, ...)
///
/// A compact surface is the case of no holes. The sum condition of
/// validate_hole_values is the caller's precondition and is not rechecked.
/// Throws OutOfScopeError for g = 0 and DomainError for mismatched lengths.
ArfInvariantOutcome arf_invariant_with_holes(int g, SpinModulus m, std::span<const int> alpha,
                                             std::span<const int> beta,
                                             std::span<const int> gamma);

/// The symmetric set read as g = 2h + (n - 1) ordinary handle pairs on the
/// closed surface P: (alpha_i, beta_i), then the primed copies, then
/// (gamma_i, delta_i).
struct HandleValues {
  std::vector<int> alpha;
  std::vector<int> beta;
};
HandleValues compact_reinterpretation(const ArfValueSet& v);

}  // namespace arfspin
