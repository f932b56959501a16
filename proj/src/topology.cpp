#include "arfspin/topology.hpp"

#include <algorithm>
#include <sstream>

#include "arfspin/errors.hpp"

namespace arfspin {

namespace {

void require_hyperbolic_genus(int g) {
  if (g < 2) {
    std::ostringstream msg;
    msg << "genus " << g << " is out of scope: only hyperbolic surfaces (g >= 2) are handled";
    throw OutOfScopeError(msg.str());
  }
}

}  // namespace

std::string_view to_string(BoundaryKind kind) {
  return kind == BoundaryKind::Oval ? "oval" : "twist";
}

std::optional<std::string> weichold_violation(int g, int k, int eps) {
  std::ostringstream msg;
  if (eps != 0 && eps != 1) {
    msg << "eps must be 0 (non-separating) or 1 (separating), got " << eps;
    return msg.str();
  }
  if (eps == 1) {
    if (k < 1 || k > g + 1) {
      msg << "separating surfaces need 1 <= k <= g+1 (got k=" << k << ", g=" << g << ")";
      return msg.str();
    }
    if ((g + 1 - k) % 2 != 0) {
      msg << "separating surfaces need k = g+1 (mod 2) (got k=" << k << ", g=" << g << ")";
      return msg.str();
    }
    return std::nullopt;
  }
  if (k < 0 || k > g) {
    msg << "non-separating surfaces need 0 <= k <= g (got k=" << k << ", g=" << g << ")";
    return msg.str();
  }
  return std::nullopt;
}

bool is_valid_topological_type(int g, int k, int eps) {
  require_hyperbolic_genus(g);
  return !weichold_violation(g, k, eps).has_value();
}

TopologicalType TopologicalType::make(int g, int k, int eps) {
  require_hyperbolic_genus(g);
  if (auto why = weichold_violation(g, k, eps)) {
    throw DomainError("invalid topological type: " + *why);
  }
  return TopologicalType(g, k, eps == 1 ? Separation::Separating : Separation::NonSeparating);
}

std::vector<TopologicalType> topological_types_of_genus(int g) {
  require_hyperbolic_genus(g);
  std::vector<TopologicalType> out;
  for (int k = 0; k <= g + 1; ++k) {
    for (int eps = 0; eps <= 1; ++eps) {
      if (!weichold_violation(g, k, eps)) out.push_back(TopologicalType::make(g, k, eps));
    }
  }
  return out;
}

std::vector<int> admissible_n_values(const TopologicalType& type) {
  if (type.separating()) return {type.k()};
  std::vector<int> out;
  for (int n = type.k() + 1; n <= type.g() + 1; ++n) {
    if ((type.g() + 1 - n) % 2 == 0) out.push_back(n);
  }
  return out;
}

Decomposition make_decomposition(const TopologicalType& type, int n) {
  const auto allowed = admissible_n_values(type);
  if (std::find(allowed.begin(), allowed.end(), n) == allowed.end()) {
    std::ostringstream msg;
    msg << "n=" << n << " is not admissible for (g,k,eps)=(" << type.g() << "," << type.k()
        << "," << type.eps() << ")";
    throw DomainError(msg.str());
  }
  std::vector<BoundaryKind> kinds(static_cast<std::size_t>(n), BoundaryKind::Twist);
  std::fill_n(kinds.begin(), type.k(), BoundaryKind::Oval);
  return Decomposition{type, n, (type.g() + 1 - n) / 2, std::move(kinds)};
}

Decomposition canonical_decomposition(const TopologicalType& type) {
  if (type.separating()) return make_decomposition(type, type.k());
  for (int n : admissible_n_values(type)) {
    if (n >= 2) return make_decomposition(type, n);
  }
  // Unreachable for g >= 2: n = g+1 >= 3 is always admissible.
  throw DomainError("no admissible decomposition with n >= 2");
}

}  // namespace arfspin
