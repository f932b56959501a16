#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arfspin {

enum class Separation : std::uint8_t { NonSeparating = 0, Separating = 1 };

/// Kind of an invariant curve c_i in a decomposition into halves.
enum class BoundaryKind : std::uint8_t { Oval, Twist };

std::string_view to_string(BoundaryKind kind);

/// Topological type (g, k, eps) of a Klein surface with g >= 2.
///
/// Instances always satisfy the Weichold admissibility conditions:
///   eps = 1:  1 <= k <= g + 1  and  k = g + 1 (mod 2)
///   eps = 0:  0 <= k <= g
class TopologicalType {
 public:
  /// Throws OutOfScopeError for g < 2 and DomainError for a non-admissible triple.
  static TopologicalType make(int g, int k, int eps);

  int g() const { return g_; }
  int k() const { return k_; }
  Separation separation() const { return eps_; }
  bool separating() const { return eps_ == Separation::Separating; }
  int eps() const { return static_cast<int>(eps_); }

  friend auto operator<=>(const TopologicalType&, const TopologicalType&) = default;

 private:
  TopologicalType(int g, int k, Separation eps) : g_(g), k_(k), eps_(eps) {}

  int g_;
  int k_;
  Separation eps_;
};

/// Weichold admissibility. Throws OutOfScopeError when g < 2.
bool is_valid_topological_type(int g, int k, int eps);

/// Human-readable description of the first admissibility clause the triple
/// violates, or nullopt if it is admissible. Does not throw for g < 2.
std::optional<std::string> weichold_violation(int g, int k, int eps);

/// All admissible types of genus g, ordered by (k, eps).
std::vector<TopologicalType> topological_types_of_genus(int g);

/// Number of invariant curves n that a decomposition into halves may use,
/// ascending. Separating: {k}. Non-separating: n in {k+1, ..., g+1} with
/// n = g + 1 (mod 2).
std::vector<int> admissible_n_values(const TopologicalType& type);

/// A choice of n invariant curves c_1..c_n cutting P into two halves of genus
/// half_genus = (g + 1 - n) / 2 with n holes each. Curves 1..k are ovals,
/// the rest twists.
struct Decomposition {
  TopologicalType type;
  int n;
  int half_genus;
  std::vector<BoundaryKind> kinds;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Throws DomainError if n is not admissible for the type.
Decomposition make_decomposition(const TopologicalType& type, int n);

/// Separating: n = k. Non-separating: the smallest admissible n >= 2.
Decomposition canonical_decomposition(const TopologicalType& type);

}  // namespace arfspin
