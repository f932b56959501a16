#include "doctest.h"

#include <sstream>

#include "arfspin/errors.hpp"
#include "arfspin/serialize.hpp"

using namespace arfspin;

TEST_CASE("value set JSON round trip") {
  const ArfValueSet v{make_decomposition(TopologicalType::make(5, 2, 1), 2), SpinModulus(4),
                      {1, 2}, {0, 3}, {2}, {3}};
  const auto j = to_json(v);
  CHECK(j.at("g") == 5);
  CHECK(j.at("n") == 2);
  CHECK(j.at("alpha") == nlohmann::json::array({1, 2}));
  CHECK(value_set_from_json(j) == v);

  const auto f = complete(v);
  const auto jf = to_json(f);
  CHECK(jf.at("gamma_n") == 2);
  CHECK(jf.at("arf_invariant") == f.arf_invariant);
  CHECK(value_set_from_json(jf) == v);
}

TEST_CASE("malformed value sets") {
  CHECK_THROWS_AS(value_set_from_json(nlohmann::json{{"g", 5}}), DomainError);
  auto j = to_json(ArfValueSet{make_decomposition(TopologicalType::make(5, 2, 1), 2),
                               SpinModulus(4), {1, 2}, {0, 3}, {2}, {3}});
  j["alpha"] = nlohmann::json::array({1});
  CHECK_THROWS_AS(value_set_from_json(j), DomainError);
  j["alpha"] = "x";
  CHECK_THROWS_AS(value_set_from_json(j), DomainError);
}

TEST_CASE("count report JSON and CSV") {
  const auto r = brute_force_counts(TopologicalType::make(3, 2, 1), SpinModulus(2));
  const auto j = to_json(r);
  CHECK(j.at("total") == "16");
  CHECK(j.at("even") == "12");
  CHECK(j.at("odd") == "4");
  CHECK(j.at("match") == true);
  CHECK(to_csv_row(r) == "3,2,1,2,2,16,12,4,12,4,true");
  std::ostringstream os;
  write_csv(os, {r});
  CHECK(os.str() == std::string(kCountCsvHeader) + "\n3,2,1,2,2,16,12,4,12,4,true\n");
}
