#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "arfspin/arf.hpp"
#include "arfspin/enumeration.hpp"

namespace arfspin {

// Flat objects: m, g, k, eps, n, alpha, beta, gamma, delta (+ gamma_n, arf_invariant).
nlohmann::json to_json(const ArfValueSet& v);
nlohmann::json to_json(const RealArfFunction& f);

/// Throws DomainError on missing fields or a shape/type mismatch. Does not validate realness.
ArfValueSet value_set_from_json(const nlohmann::json& j);

/// Counts are decimal strings so they survive JSON readers without big integers.
nlohmann::json to_json(const CountReport& r);

inline constexpr const char* kCountCsvHeader = "g,k,eps,m,n,total,even,odd,cf_even,cf_odd,match";

std::string to_csv_row(const CountReport& r);
void write_csv(std::ostream& out, const std::vector<CountReport>& reports);

}  // namespace arfspin
