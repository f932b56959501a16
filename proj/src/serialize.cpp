#include "arfspin/serialize.hpp"

#include <ostream>
#include <sstream>

#include "arfspin/errors.hpp"

namespace arfspin {

using nlohmann::json;

json to_json(const ArfValueSet& v) {
  const auto& t = v.decomp.type;
  return json{{"m", v.m.value()},    {"g", t.g()},          {"k", t.k()},
              {"eps", t.eps()},      {"n", v.decomp.n},     {"alpha", v.alpha},
              {"beta", v.beta},      {"gamma", v.gamma},    {"delta", v.delta}};
}

json to_json(const RealArfFunction& f) {
  json j = to_json(f.values);
  j["gamma_n"] = f.gamma_n;
  j["arf_invariant"] = f.arf_invariant;
  return j;
}

ArfValueSet value_set_from_json(const json& j) {
  try {
    const auto type =
        TopologicalType::make(j.at("g").get<int>(), j.at("k").get<int>(), j.at("eps").get<int>());
    ArfValueSet v{make_decomposition(type, j.at("n").get<int>()),
                  SpinModulus(j.at("m").get<int>()),
                  j.at("alpha").get<std::vector<int>>(),
                  j.at("beta").get<std::vector<int>>(),
                  j.at("gamma").get<std::vector<int>>(),
                  j.at("delta").get<std::vector<int>>()};
    check_structure(v);
    return v;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed value set: ") + e.what());
  }
}

json to_json(const CountReport& r) {
  return json{{"g", r.type.g()},
              {"k", r.type.k()},
              {"eps", r.type.eps()},
              {"m", r.m},
              {"n", r.n_used},
              {"total", r.total.str()},
              {"even", r.even_count.str()},
              {"odd", r.odd_count.str()},
              {"cf_even", r.closed_form_even.str()},
              {"cf_odd", r.closed_form_odd.str()},
              {"match", r.match}};
}

std::string to_csv_row(const CountReport& r) {
  std::ostringstream os;
  os << r.type.g() << ',' << r.type.k() << ',' << r.type.eps() << ',' << r.m << ',' << r.n_used
     << ',' << r.total << ',' << r.even_count << ',' << r.odd_count << ',' << r.closed_form_even
     << ',' << r.closed_form_odd << ',' << (r.match ? "true" : "false");
  return os.str();
}

void write_csv(std::ostream& out, const std::vector<CountReport>& reports) {
  out << kCountCsvHeader << '\n';
  for (const auto& r : reports) out << to_csv_row(r) << '\n';
}

}  // namespace arfspin
