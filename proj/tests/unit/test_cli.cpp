#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "arfspin/cli.hpp"
#include "json.hpp"

using arfspin::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("counts") {
  auto r = run({"counts", "--m", "3", "--g", "4", "--k", "1", "--eps", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "g,k,eps,m,delta,N\n4,1,1,3,0,81\n4,1,1,3,1,0\n");

  r = run({"counts", "--m", "4", "--g", "4", "--k", "2", "--eps", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "g,k,eps,m,delta,N\n4,2,0,4,0,0\n4,2,0,4,1,0\n");

  r = run({"counts", "--g", "1", "--k", "0", "--eps", "0", "--m", "2"});
  CHECK(r.code == 2);

  r = run({"counts", "--g", "2", "--k", "2", "--eps", "1", "--m", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("k = g+1 (mod 2)") != std::string::npos);

  r = run({"counts", "--g-max", "3", "--m-max", "2", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  // Genus 2 has 5 types, genus 3 has 6; two rows (delta = 0, 1) each.
  CHECK(j.size() == 22);
  CHECK(j[0].at("N") == "2");
}

TEST_CASE("verify") {
  auto r = run({"verify", "--g-max", "2", "--m-max", "2", "--format", "csv"});
  CHECK(r.out.rfind("g,k,eps,m,n,total,even,odd,cf_even,cf_odd,match\n", 0) == 0);
  // (2,0,0) at m = 2 is one of the cells where the k = 0 closed form disagrees.
  CHECK(r.code == 1);
  CHECK(r.err.find("mismatch g=2 k=0 eps=0 m=2 n=3") != std::string::npos);
  CHECK(r.err.find("SumConstraintViolated") != std::string::npos);

  r = run({"verify", "--g-max", "3", "--m-max", "3", "--threads", "2", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  bool all_match = true;
  for (const auto& row : j) {
    if (row.at("g") == 3) all_match = all_match && row.at("match").get<bool>();
  }
  CHECK(all_match);

  CHECK(run({"verify", "--g-max", "1", "--m-max", "3"}).code == 2);
  CHECK(run({"verify", "--m-max", "3"}).code == 2);
}

TEST_CASE("cover-check") {
  auto r = run({"cover-check", "--samples", "1", "--seed", "0", "--m", "2"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 8);
  CHECK(j[0].at("identity") == "J_squared_is_identity");
  CHECK(j[0].at("pass") == true);
  CHECK(run({"cover-check", "--tol", "0"}).code == 2);
  CHECK(run({"cover-check", "--samples", "0"}).code == 2);

  const auto a = run({"cover-check", "--samples", "20", "--seed", "5"});
  const auto b = run({"cover-check", "--samples", "20", "--seed", "5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "--g", "3", "--k", "2", "--eps", "1", "--m", "2"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.at("g") == 3);
    ++count;
  }
  CHECK(count == 16);

  r = run({"enumerate", "--g", "3", "--k", "2", "--eps", "1", "--m", "2", "--limit", "3",
           "--format", "csv"});
  CHECK(r.out.rfind("m,g,k,eps,n,alpha,beta,gamma,delta,gamma_n,arf_invariant\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);

  CHECK(run({"enumerate", "--g", "5", "--k", "2", "--eps", "0", "--m", "2", "--n", "5"}).code == 2);
}

TEST_CASE("usage errors and output files") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"counts", "--format", "xml", "--g-max", "2", "--m-max", "2"}).code == 2);
  CHECK(run({"counts", "--help"}).code == 0);

  const auto path = std::filesystem::temp_directory_path() / "arfspin_cli_test.csv";
  const auto r = run({"counts", "--g-max", "2", "--m-max", "2", "--output", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "g,k,eps,m,delta,N");
  std::filesystem::remove(path);
}
