#include "arfspin/arf.hpp"

#include <numeric>
#include <sstream>
#include <string>

namespace arfspin {

SpinModulus::SpinModulus(int m) : m_(m) {
  if (m < 2) throw DomainError("spin modulus must be at least 2, got " + std::to_string(m));
}

int SpinModulus::reduce(long long x) const {
  const long long r = x % m_;
  return static_cast<int>(r < 0 ? r + m_ : r);
}

bool SpinModulus::is_half_period(int residue) const { return reduce(2LL * residue) == 0; }

std::string_view to_string(Validation v) {
  switch (v) {
    case Validation::Ok: return "Ok";
    case Validation::GenusInadmissible: return "GenusInadmissible";
    case Validation::OvalValueNotHalfPeriod: return "OvalValueNotHalfPeriod";
    case Validation::TwistValueNonzero: return "TwistValueNonzero";
    case Validation::SumConstraintViolated: return "SumConstraintViolated";
  }
  return "?";
}

ValidationFailure::ValidationFailure(Validation code)
    : DomainError("value set is not real: " + std::string(to_string(code))), code_(code) {}

bool spin_admissible(int g, SpinModulus m) {
  const int period = m.even() ? m.value() / 2 : m.value();
  return (g - 1) % period == 0;
}

void check_structure(const ArfValueSet& v) {
  const auto h = static_cast<std::size_t>(v.decomp.half_genus);
  const auto bridges = static_cast<std::size_t>(v.decomp.n - 1);
  if (v.alpha.size() != h || v.beta.size() != h || v.gamma.size() != bridges ||
      v.delta.size() != bridges) {
    std::ostringstream msg;
    msg << "value set shape mismatch: expected " << h << " handle values and " << bridges
        << " curve/bridge values";
    throw DomainError(msg.str());
  }
  auto in_range = [&](const std::vector<int>& xs) {
    for (int x : xs) {
      if (x < 0 || x >= v.m.value()) return false;
    }
    return true;
  };
  if (!in_range(v.alpha) || !in_range(v.beta) || !in_range(v.gamma) || !in_range(v.delta)) {
    throw DomainError("value set residues must lie in [0, m)");
  }
}

int derived_gamma_n(const ArfValueSet& v) {
  long long sum = 0;
  for (int x : v.gamma) sum += x;
  return v.m.reduce(1LL - v.decomp.type.g() - sum);
}

Validation validate_real_value_set(const ArfValueSet& v) {
  check_structure(v);
  const auto& type = v.decomp.type;
  const SpinModulus m = v.m;
  if (!spin_admissible(type.g(), m)) return Validation::GenusInadmissible;

  const int k = type.k();
  const int stored = v.decomp.n - 1;
  for (int i = 0; i < stored; ++i) {
    const int x = v.gamma[static_cast<std::size_t>(i)];
    if (v.decomp.kinds[static_cast<std::size_t>(i)] == BoundaryKind::Oval) {
      if (!m.is_half_period(x)) return Validation::OvalValueNotHalfPeriod;
    } else if (x != 0) {
      return Validation::TwistValueNonzero;
    }
  }

  if (type.separating()) {
    // c_n is the last oval; its value is forced by the half-surface sum.
    if (!m.is_half_period(derived_gamma_n(v))) return Validation::OvalValueNotHalfPeriod;
    return Validation::Ok;
  }

  // Non-separating: n > k, so gamma_k (if k >= 1) is stored; c_n is a twist.
  long long free_sum = 0;
  for (int i = 0; i + 1 < k; ++i) free_sum += v.gamma[static_cast<std::size_t>(i)];
  if (k == 0) {
    if (m.reduce(1LL - type.g()) != 0) return Validation::SumConstraintViolated;
    return Validation::Ok;
  }
  const int forced = m.reduce(1LL - type.g() - free_sum);
  if (!m.is_half_period(forced)) return Validation::OvalValueNotHalfPeriod;
  if (forced != v.gamma[static_cast<std::size_t>(k - 1)]) return Validation::SumConstraintViolated;
  return Validation::Ok;
}

int arf_invariant_symmetric(const ArfValueSet& v) {
  if (!v.m.even()) return 0;
  int parity = 0;
  for (std::size_t i = 0; i < v.gamma.size(); ++i) {
    parity ^= ((1 - v.gamma[i]) * (1 - v.delta[i])) & 1;
  }
  return parity;
}

RealArfFunction complete(ArfValueSet v) {
  if (const auto code = validate_real_value_set(v); code != Validation::Ok) {
    throw ValidationFailure(code);
  }
  RealArfFunction out{std::move(v), 0, 0};
  out.gamma_n = derived_gamma_n(out.values);
  out.arf_invariant = arf_invariant_symmetric(out.values);
  return out;
}

bool validate_hole_values(int g, SpinModulus m, std::span<const int> alpha,
                          std::span<const int> beta, std::span<const int> gamma) {
  if (alpha.size() != static_cast<std::size_t>(g) || beta.size() != alpha.size()) {
    throw DomainError("expected one alpha and one beta value per handle");
  }
  const long long n = static_cast<long long>(gamma.size());
  const long long sum = std::accumulate(gamma.begin(), gamma.end(), 0LL);
  return m.reduce(sum - ((2LL - 2LL * g) - n)) == 0;
}

ArfInvariantOutcome arf_invariant_with_holes(int g, SpinModulus m, std::span<const int> alpha,
                                             std::span<const int> beta,
                                             std::span<const int> gamma) {
  if (g < 1) throw OutOfScopeError("Arf invariant of a genus-0 surface is out of scope");
  if (alpha.size() != static_cast<std::size_t>(g) || beta.size() != alpha.size()) {
    throw DomainError("expected one alpha and one beta value per handle");
  }
  if (g == 1) {
    int d = std::gcd(m.value(), std::gcd(m.reduce(alpha[0]), m.reduce(beta[0])));
    for (int c : gamma) d = std::gcd(d, m.reduce(c + 1LL));
    return ArfInvariantOutcome::gcd(d);
  }
  if (!m.even()) return ArfInvariantOutcome::zero();
  for (int c : gamma) {
    if (m.reduce(c) % 2 == 0) return ArfInvariantOutcome::zero();
  }
  int parity = 0;
  for (int i = 0; i < g; ++i) {
    parity ^= ((1 - m.reduce(alpha[i])) * (1 - m.reduce(beta[i]))) & 1;
  }
  return parity ? ArfInvariantOutcome::one() : ArfInvariantOutcome::zero();
}

HandleValues compact_reinterpretation(const ArfValueSet& v) {
  HandleValues out;
  out.alpha = v.alpha;
  out.alpha.insert(out.alpha.end(), v.alpha.begin(), v.alpha.end());
  out.alpha.insert(out.alpha.end(), v.gamma.begin(), v.gamma.end());
  out.beta = v.beta;
  out.beta.insert(out.beta.end(), v.beta.begin(), v.beta.end());
  out.beta.insert(out.beta.end(), v.delta.begin(), v.delta.end());
  return out;
}

}  // namespace arfspin
