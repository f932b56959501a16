// Acceptance suite: one PASS/FAIL line per criterion.
//
//   arfspin_acceptance                 all criteria
//   arfspin_acceptance --criterion 4   just one
//
// Exit status is 0 iff every selected criterion passes.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "arfspin/arf.hpp"
#include "arfspin/cover_check.hpp"
#include "arfspin/enumeration.hpp"

using namespace arfspin;

namespace {

constexpr int kGMax = 6;
constexpr int kMMax = 6;
constexpr int kCoverSamples = 1000;
constexpr std::uint64_t kCoverSeed = 20240601;
constexpr double kCoverTol = 1e-9;

struct Outcome {
  bool pass;
  std::string summary;
  std::vector<std::string> details;
};

// The five count bullets, transcribed here independently of the library.
BigInt intro_count(int g, int k, int eps, int m, int delta) {
  BigInt mg = 1;
  for (int i = 0; i < g; ++i) mg *= m;
  auto pow2 = [](int e) { return BigInt(1) << e; };
  if (m % 2 == 1) return (g - 1) % m == 0 && delta == 0 ? mg : BigInt(0);
  if ((g - 1) % (m / 2) != 0) return 0;
  if (eps == 0 && k == 0) return mg / 2;
  if (eps == 0 || m % 4 == 0) return mg * pow2(k) / 4;
  return delta == 0 ? BigInt(mg / 2 * (pow2(k - 1) + 1)) : BigInt(mg / 2 * (pow2(k - 1) - 1));
}

bool genus_admissible(int g, int m) {
  const int p = m % 2 == 0 ? m / 2 : m;
  return (g - 1) % p == 0;
}

std::string cell_name(const CountReport& r) {
  std::ostringstream os;
  os << "(g=" << r.type.g() << ",k=" << r.type.k() << ",eps=" << r.type.eps() << ",m=" << r.m
     << ",n=" << r.n_used << ")";
  return os.str();
}

const std::vector<CountReport>& sweep() {
  static const std::vector<CountReport> reports = verify_range(kGMax, kMMax, default_thread_count());
  return reports;
}

Outcome criterion1() {
  Outcome o{true, {}, {}};
  int cells = 0, bad = 0;
  for (const auto& r : sweep()) {
    ++cells;
    const BigInt want_even = intro_count(r.type.g(), r.type.k(), r.type.eps(), r.m, 0);
    const BigInt want_odd = intro_count(r.type.g(), r.type.k(), r.type.eps(), r.m, 1);
    const bool transcription_ok =
        want_even == r.closed_form_even && want_odd == r.closed_form_odd;
    const bool ok = r.even_count == want_even && r.odd_count == want_odd;
    if (!ok || !transcription_ok) {
      ++bad;
      std::ostringstream os;
      os << cell_name(r) << " brute " << r.even_count << "/" << r.odd_count << " vs closed form "
         << want_even << "/" << want_odd;
      if (!transcription_ok) os << " (library closed form " << r.closed_form_even << "/"
                                << r.closed_form_odd << ")";
      o.details.push_back(os.str());
    }
  }
  o.pass = bad == 0;
  std::ostringstream s;
  s << "count-formula reproduction, g<=" << kGMax << ", m<=" << kMMax << ": " << cells - bad
    << "/" << cells << " cells exact";
  o.summary = s.str();
  return o;
}

Outcome criterion2() {
  std::map<std::tuple<int, int, int>, std::vector<const CountReport*>> groups;
  for (const auto& r : sweep()) {
    if (!r.type.separating()) groups[{r.type.g(), r.type.k(), r.m}].push_back(&r);
  }
  Outcome o{true, {}, {}};
  int compared = 0;
  for (const auto& [key, rs] : groups) {
    for (const auto* r : rs) {
      if (r->n_used < 2) continue;
      const auto* first = rs.front();
      ++compared;
      if (r->total != first->total || r->even_count != first->even_count ||
          r->odd_count != first->odd_count) {
        o.pass = false;
        o.details.push_back(cell_name(*r) + " differs from " + cell_name(*first));
      }
    }
  }
  o.summary = "cross-n invariance over " + std::to_string(groups.size()) +
              " non-separating (g,k,m) groups, " + std::to_string(compared) + " decompositions";
  return o;
}

Outcome criterion3() {
  Outcome o{true, {}, {}};
  int checked = 0;
  for (const auto& r : sweep()) {
    if (genus_admissible(r.type.g(), r.m)) continue;
    ++checked;
    RealArfStream s(r.type, SpinModulus(r.m), r.n_used);
    const bool stream_empty = !s.next().has_value();
    if (r.total != 0 || r.closed_form_even != 0 || r.closed_form_odd != 0 || !stream_empty) {
      o.pass = false;
      o.details.push_back(cell_name(r) + " is inadmissible but not empty");
    }
  }
  o.summary = "non-existence in " + std::to_string(checked) + " inadmissible cells";
  return o;
}

Outcome criterion4() {
  Outcome o{true, {}, {}};
  double worst = 0;
  int identities = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int m = 2; m <= 6; ++m) {
    for (const auto& r : cover::run_identity_suite(m, kCoverSamples, kCoverSeed, kCoverTol)) {
      ++identities;
      worst = std::max(worst, r.max_residual);
      if (!r.pass) {
        o.pass = false;
        o.details.push_back(r.identity + " m=" + std::to_string(m) + ": " + r.failure);
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream s;
  s << "covering-group identities: " << identities << " (identity, m) runs x " << kCoverSamples
    << " samples, max residual " << worst << " (tol " << kCoverTol << "), " << secs << " s";
  o.summary = s.str();
  return o;
}

Outcome criterion5() {
  Outcome o{true, {}, {}};
  const SpinModulus two(2);
  long long checked = 0;
  for (int g = 2; g <= 4; ++g) {
    for (const auto& t : topological_types_of_genus(g)) {
      for (int n : admissible_n_values(t)) {
        const auto d = make_decomposition(t, n);
        const int h = d.half_genus;
        const int len = 2 * h + 2 * (n - 1);
        for (int bits = 0; bits < (1 << len); ++bits) {
          ArfValueSet v{d, two, {}, {}, {}, {}};
          int pos = 0;
          auto take = [&](int count) {
            std::vector<int> xs;
            for (int i = 0; i < count; ++i) xs.push_back((bits >> pos++) & 1);
            return xs;
          };
          v.alpha = take(h);
          v.beta = take(h);
          v.gamma = take(n - 1);
          v.delta = take(n - 1);
          const auto hv = compact_reinterpretation(v);
          const auto holes = arf_invariant_with_holes(g, two, hv.alpha, hv.beta, {});
          const int compact = holes.kind == ArfInvariantOutcome::Kind::One ? 1 : 0;
          ++checked;
          if (compact != arf_invariant_symmetric(v) ||
              holes.kind == ArfInvariantOutcome::Kind::Divisor) {
            o.pass = false;
            if (o.details.size() < 10) {
              o.details.push_back("disagreement at g=" + std::to_string(g) + " n=" +
                                  std::to_string(n) + " bits=" + std::to_string(bits));
            }
          }
        }
      }
    }
  }
  o.summary = "half-surface consistency, m=2, g<=4: " + std::to_string(checked) + " value sets";
  return o;
}

Outcome criterion6() {
  Outcome o{true, {}, {}};
  // Determinism.
  int streams = 0;
  for (int g = 2; g <= 5; ++g) {
    for (const auto& t : topological_types_of_genus(g)) {
      for (int m = 2; m <= 4; ++m) {
        for (int n : verification_n_values(t)) {
          RealArfStream a(t, SpinModulus(m), n), b(t, SpinModulus(m), n);
          ++streams;
          while (true) {
            auto x = a.next();
            auto y = b.next();
            if (x != y) {
              o.pass = false;
              o.details.push_back("stream differs between runs");
              break;
            }
            if (!x) break;
          }
        }
      }
    }
  }
  // Parallel merge.
  int merges = 0;
  for (const auto& r : sweep()) {
    const Tally seq = brute_force_tally(r.type, SpinModulus(r.m), r.n_used, 1);
    for (unsigned threads : {2u, 4u, 7u}) {
      ++merges;
      if (brute_force_tally(r.type, SpinModulus(r.m), r.n_used, threads) != seq) {
        o.pass = false;
        o.details.push_back(cell_name(r) + " parallel tally differs with " +
                            std::to_string(threads) + " threads");
      }
    }
  }
  // Error-code coverage by constructed inputs.
  auto make = [](int g, int k, int eps, int m, int n, std::vector<int> hv, std::vector<int> c) {
    const auto d = make_decomposition(TopologicalType::make(g, k, eps), n);
    return ArfValueSet{d, SpinModulus(m), hv, hv, std::move(c),
                       std::vector<int>(static_cast<std::size_t>(n - 1), 0)};
  };
  const std::vector<std::pair<Validation, ArfValueSet>> probes = {
      {Validation::Ok, make(3, 2, 0, 4, 4, {}, {0, 2, 0})},
      {Validation::GenusInadmissible, make(4, 0, 0, 4, 3, {0}, {0, 0})},
      {Validation::OvalValueNotHalfPeriod, make(3, 2, 0, 4, 4, {}, {1, 2, 0})},
      {Validation::TwistValueNonzero, make(3, 0, 0, 2, 2, {0}, {1})},
      {Validation::SumConstraintViolated, make(3, 1, 0, 4, 2, {0}, {0})},
  };
  for (const auto& [want, v] : probes) {
    if (validate_real_value_set(v) != want) {
      o.pass = false;
      o.details.push_back("constructed input does not reach " + std::string(to_string(want)));
    }
  }
  o.summary = "properties: " + std::to_string(streams) + " streams deterministic, " +
              std::to_string(merges) + " parallel merges, " + std::to_string(probes.size()) +
              " validation codes reached";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::optional<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: arfspin_acceptance [--criterion N]\n";
      return 2;
    }
  }
  using Fn = Outcome (*)();
  const std::vector<Fn> criteria = {criterion1, criterion2, criterion3,
                                    criterion4, criterion5, criterion6};
  if (only && (*only < 1 || *only > static_cast<int>(criteria.size()))) {
    std::cerr << "no criterion " << *only << "\n";
    return 2;
  }
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i + 1) != *only) continue;
    const Outcome o = criteria[i]();
    all = all && o.pass;
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << o.summary
              << "\n";
    for (const auto& d : o.details) std::cout << "       " << d << "\n";
  }
  return all ? 0 : 1;
}
