#include "arfspin/cover_check.hpp"

#include <cmath>
#include <exception>
#include <functional>
#include <limits>

#include "arfspin/errors.hpp"

namespace arfspin::cover {

namespace {

struct Trial {
  double residual;
  bool exact;  // level identities: the snapped levels agree
};

using TrialFn = std::function<Trial(std::mt19937_64&, int, double)>;

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

BoundaryPoint random_boundary_point(std::mt19937_64& rng) {
  if (uniform(rng, 0, 1) < 0.1) return BoundaryPoint::inf();
  return BoundaryPoint::at(uniform(rng, -5, 5));
}

Trial distance_trial(const CoverElement& x, const CoverElement& y) {
  return {element_distance(x, y), true};
}

Trial j_squared(std::mt19937_64& rng, int m, double tol) {
  const CoverElement j = make_J(uniform_int(rng, 0, m - 1), m);
  return distance_trial(multiply(j, j, tol), identity_element(m));
}

Trial j_hyperbolic(std::mt19937_64& rng, int m, double tol) {
  const CoverElement j = make_J(uniform_int(rng, 0, m - 1), m);
  const CoverElement t = standard_hyperbolic_lift(random_multiplier(rng), m);
  return distance_trial(multiply(multiply(j, t, tol), invert(j, tol), tol), t);
}

Trial j_parabolic(std::mt19937_64& rng, int m, double tol) {
  const CoverElement j = make_J(uniform_int(rng, 0, m - 1), m);
  const double mu = random_parabolic_param(rng);
  const CoverElement p = standard_parabolic_lift(mu, m);
  return distance_trial(multiply(multiply(j, p, tol), invert(j, tol), tol),
                        standard_parabolic_lift(-mu, m));
}

Trial j_center(std::mt19937_64& rng, int m, double tol) {
  const CoverElement j = make_J(uniform_int(rng, 0, m - 1), m);
  const int k = uniform_int(rng, 0, m - 1);
  return distance_trial(multiply(multiply(j, central(k, m), tol), invert(j, tol), tol),
                        central(-k, m));
}

Trial level_conjugation(std::mt19937_64& rng, int m, double tol) {
  const CoverElement b = random_preserving_element(rng, m);
  const CoverElement c = random_level_element(rng, m);
  const LevelResult before = level_with_residual(c, tol);
  const LevelResult after =
      level_with_residual(multiply(multiply(b, c, tol), invert(b, tol), tol), tol);
  return {std::max(before.residual, after.residual), before.level == after.level};
}

Trial level_j_conjugation(std::mt19937_64& rng, int m, double tol) {
  const CoverElement j = make_J(uniform_int(rng, 0, m - 1), m);
  const int k = uniform_int(rng, 0, m - 1);
  const CoverElement c =
      multiply(standard_hyperbolic_lift(random_multiplier(rng), m), central(k, m), tol);
  const LevelResult before = level_with_residual(c, tol);
  const LevelResult after = level_with_residual(multiply(multiply(j, c, tol), j, tol), tol);
  return {std::max(before.residual, after.residual),
          before.level == k && after.level == (m - k) % m};
}

Trial level_reversing_conjugation(std::mt19937_64& rng, int m, double tol) {
  const CoverElement f =
      multiply(random_preserving_element(rng, m), make_J(uniform_int(rng, 0, m - 1), m), tol);
  const CoverElement c = random_level_element(rng, m);
  const LevelResult before = level_with_residual(c, tol);
  const LevelResult after =
      level_with_residual(multiply(multiply(f, c, tol), invert(f, tol), tol), tol);
  return {std::max(before.residual, after.residual), after.level == (m - before.level) % m};
}

Trial twist_lift_square(std::mt19937_64& rng, int m, double tol) {
  const CoverElement j = make_J(uniform_int(rng, 0, m - 1), m);
  const double lambda = random_multiplier(rng);
  const CoverElement half = standard_hyperbolic_lift(std::sqrt(lambda), m);
  const CoverElement target = standard_hyperbolic_lift(lambda, m);
  Trial worst{0.0, true};
  for (int q = 0; q < m; ++q) {
    const CoverElement x = multiply(multiply(j, half, tol), central(q, m), tol);
    worst.residual = std::max(worst.residual, element_distance(multiply(x, x, tol), target));
  }
  return worst;
}

struct IdentitySpec {
  std::string name;
  TrialFn run;
};

const std::vector<IdentitySpec>& identity_specs() {
  static const std::vector<IdentitySpec> specs = {
      {"J_squared_is_identity", j_squared},
      {"J_fixes_standard_hyperbolic", j_hyperbolic},
      {"J_reverses_standard_parabolic", j_parabolic},
      {"J_inverts_center", j_center},
      {"level_conjugation_invariant", level_conjugation},
      {"level_J_conjugation_negates", level_j_conjugation},
      {"level_reversing_conjugation_negates", level_reversing_conjugation},
      {"twist_lift_square", twist_lift_square},
  };
  return specs;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : identity_specs()) out.push_back(s.name);
    return out;
  }();
  return names;
}

double random_multiplier(std::mt19937_64& rng) {
  const double magnitude = uniform(rng, 0.05, 3.0);
  return std::exp(uniform(rng, 0, 1) < 0.5 ? magnitude : -magnitude);
}

double random_parabolic_param(std::mt19937_64& rng) {
  const double magnitude = uniform(rng, 0.05, 3.0);
  return uniform(rng, 0, 1) < 0.5 ? magnitude : -magnitude;
}

Isometry random_hyperbolic(std::mt19937_64& rng) {
  BoundaryPoint alpha = random_boundary_point(rng);
  BoundaryPoint beta = random_boundary_point(rng);
  while ((alpha.infinite && beta.infinite) ||
         (!alpha.infinite && !beta.infinite && std::abs(alpha.x - beta.x) < 0.25)) {
    beta = random_boundary_point(rng);
  }
  return make_hyperbolic(alpha, beta, random_multiplier(rng));
}

Isometry random_parabolic(std::mt19937_64& rng) {
  const double alpha = uniform(rng, -5, 5);
  return make_parabolic(alpha, random_parabolic_param(rng) / (1 + alpha * alpha));
}

CoverElement random_preserving_element(std::mt19937_64& rng, int m) {
  const CoverElement x = canonical_lift(random_hyperbolic(rng), m);
  const CoverElement y = canonical_lift(random_parabolic(rng), m);
  return multiply(multiply(x, y), central(uniform_int(rng, 0, m - 1), m));
}

CoverElement random_level_element(std::mt19937_64& rng, int m) {
  const Isometry base = uniform(rng, 0, 1) < 0.5 ? random_hyperbolic(rng) : random_parabolic(rng);
  return multiply(canonical_lift(base, m), central(uniform_int(rng, 0, m - 1), m));
}

std::vector<IdentityReport> run_identity_suite(int m, int samples, std::uint64_t seed, double tol) {
  if (samples < 1) throw DomainError("samples must be at least 1");
  if (m < 2) throw DomainError("cover modulus must be at least 2");
  if (!(tol > 0)) throw DomainError("tolerance must be positive");

  std::vector<IdentityReport> out;
  const auto& specs = identity_specs();
  for (std::size_t idx = 0; idx < specs.size(); ++idx) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(idx)};
    std::mt19937_64 rng(seq);
    IdentityReport r{specs[idx].name, m, samples, 0.0, true, {}};
    for (int s = 0; s < samples; ++s) {
      try {
        const Trial t = specs[idx].run(rng, m, tol);
        r.max_residual = std::max(r.max_residual, t.residual);
        if (!t.exact && r.failure.empty()) r.failure = "level mismatch at sample " + std::to_string(s);
        if (!(t.residual <= tol) && r.failure.empty()) {
          r.failure = "residual above tolerance at sample " + std::to_string(s);
        }
      } catch (const std::exception& e) {
        r.max_residual = std::numeric_limits<double>::infinity();
        if (r.failure.empty()) r.failure = "sample " + std::to_string(s) + ": " + e.what();
      }
    }
    r.pass = r.failure.empty();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace arfspin::cover
