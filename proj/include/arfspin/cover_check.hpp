#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "arfspin/cover.hpp"

namespace arfspin::cover {

struct IdentityReport {
  std::string identity;
  int m = 0;
  int samples = 0;
  double max_residual = 0.0;
  bool pass = false;
  std::string failure;  // first failure message, empty on pass
};

/// Names of the checked identities, in report order.
const std::vector<std::string>& identity_names();

/// Runs every identity `samples` times for modulus m. Each identity draws
/// from its own generator seeded from (seed, m, identity index), so reports
/// do not depend on which other identities run. Throws DomainError for
/// samples < 1, m < 2 or tol <= 0.
std::vector<IdentityReport> run_identity_suite(int m, int samples, std::uint64_t seed,
                                               double tol = kDefaultTol);

// Random draws shared with the tests.
double random_multiplier(std::mt19937_64& rng);        // in (e^-2, e^2), away from 1
double random_parabolic_param(std::mt19937_64& rng);   // in [-3, 3], away from 0
Isometry random_hyperbolic(std::mt19937_64& rng);
Isometry random_parabolic(std::mt19937_64& rng);
/// Product of two canonical lifts and a central element; its base may be elliptic.
CoverElement random_preserving_element(std::mt19937_64& rng, int m);
/// canonical lift of a random hyperbolic or parabolic isometry times U^k.
CoverElement random_level_element(std::mt19937_64& rng, int m);

}  // namespace arfspin::cover
