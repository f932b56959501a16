#include "arfspin/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "arfspin/cover_check.hpp"
#include "arfspin/enumeration.hpp"
#include "arfspin/errors.hpp"
#include "arfspin/serialize.hpp"

namespace arfspin::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::optional<int> g, k, eps, m, n;
  std::optional<int> g_max, m_max;
  std::optional<unsigned> threads;
  int samples = 1000;
  std::uint64_t seed = 0;
  double tol = cover::kDefaultTol;
  std::optional<long long> limit;
  std::string format;
  std::string output;
};

TopologicalType explicit_type(const Config& c) {
  if (!c.g || !c.k || !c.eps) throw UsageError("--g, --k and --eps must be given together");
  if (*c.g < 2) throw UsageError("genus must be at least 2 (g < 2 is out of scope)");
  if (auto why = weichold_violation(*c.g, *c.k, *c.eps)) {
    throw UsageError("invalid topological type (" + std::to_string(*c.g) + "," +
                     std::to_string(*c.k) + "," + std::to_string(*c.eps) + "): " + *why);
  }
  return TopologicalType::make(*c.g, *c.k, *c.eps);
}

SpinModulus modulus(int m) {
  if (m < 2) throw UsageError("m must be at least 2");
  return SpinModulus(m);
}

void check_range(const Config& c) {
  if (!c.g_max || !c.m_max) throw UsageError("--g-max and --m-max are required");
  if (*c.g_max < 2) throw UsageError("--g-max must be at least 2");
  if (*c.m_max < 2) throw UsageError("--m-max must be at least 2");
}

// counts ---------------------------------------------------------------------

struct CountRow {
  TopologicalType type;
  int m;
  int delta;
  BigInt count;
};

std::vector<CountRow> count_rows(const Config& c) {
  std::vector<TopologicalType> types;
  std::vector<int> moduli;
  if (c.g || c.k || c.eps) {
    types.push_back(explicit_type(c));
    if (!c.m) throw UsageError("--m is required with an explicit type");
    moduli.push_back(modulus(*c.m).value());
  } else {
    check_range(c);
    for (int g = 2; g <= *c.g_max; ++g) {
      for (const auto& t : topological_types_of_genus(g)) types.push_back(t);
    }
    for (int m = 2; m <= *c.m_max; ++m) moduli.push_back(m);
  }
  std::vector<CountRow> rows;
  for (const auto& t : types) {
    for (int m : moduli) {
      for (int delta : {0, 1}) rows.push_back({t, m, delta, closed_form_count(t, SpinModulus(m), delta)});
    }
  }
  return rows;
}

void write_counts(std::ostream& os, const std::vector<CountRow>& rows, const std::string& format) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"g", r.type.g()},
                     {"k", r.type.k()},
                     {"eps", r.type.eps()},
                     {"m", r.m},
                     {"delta", r.delta},
                     {"N", r.count.str()}});
    }
    os << arr.dump(2) << '\n';
    return;
  }
  os << "g,k,eps,m,delta,N\n";
  for (const auto& r : rows) {
    os << r.type.g() << ',' << r.type.k() << ',' << r.type.eps() << ',' << r.m << ',' << r.delta
       << ',' << r.count << '\n';
  }
}

// verify ---------------------------------------------------------------------

void describe_mismatch(std::ostream& err, const CountReport& r) {
  const Decomposition d = make_decomposition(r.type, r.n_used);
  err << "mismatch g=" << r.type.g() << " k=" << r.type.k() << " eps=" << r.type.eps()
      << " m=" << r.m << " n=" << r.n_used << ": brute force even/odd " << r.even_count << "/"
      << r.odd_count << ", closed form " << r.closed_form_even << "/" << r.closed_form_odd << '\n';
  err << "  decomposition: half_genus=" << d.half_genus << " curves=[";
  for (std::size_t i = 0; i < d.kinds.size(); ++i) err << (i ? "," : "") << to_string(d.kinds[i]);
  err << "] value sets: alpha,beta in (Z/" << r.m << ")^" << d.half_genus << ", gamma,delta in (Z/"
      << r.m << ")^" << d.n - 1 << '\n';
  err << "  candidates=" << r.tally.candidates << " accepted=" << r.total << " rejected:";
  for (int code = 1; code < kValidationCodeCount; ++code) {
    err << ' ' << to_string(static_cast<Validation>(code)) << '='
        << r.tally.rejected_by[static_cast<std::size_t>(code)];
  }
  err << '\n';
}

// enumerate ------------------------------------------------------------------

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

// ----------------------------------------------------------------------------

int dispatch(const std::string& sub, const Config& c, std::ostream& out, std::ostream& err) {
  if (sub == "counts") {
    write_counts(out, count_rows(c), c.format.empty() ? "csv" : c.format);
    return kExitOk;
  }
  if (sub == "verify") {
    check_range(c);
    const unsigned threads = c.threads ? *c.threads : default_thread_count();
    const auto reports = verify_range(*c.g_max, *c.m_max, threads);
    if (c.format == "json") {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      out << arr.dump(2) << '\n';
    } else {
      write_csv(out, reports);
    }
    int mismatches = 0;
    for (const auto& r : reports) {
      if (!r.match) {
        ++mismatches;
        describe_mismatch(err, r);
      }
    }
    if (mismatches) {
      err << mismatches << " of " << reports.size() << " cells disagree with the closed form\n";
      return kExitVerificationFailure;
    }
    return kExitOk;
  }
  if (sub == "cover-check") {
    if (!(c.tol > 0)) throw UsageError("--tol must be positive");
    if (c.samples < 1) throw UsageError("--samples must be at least 1");
    std::vector<int> moduli;
    if (c.m) {
      moduli.push_back(modulus(*c.m).value());
    } else {
      for (int m = 2; m <= 6; ++m) moduli.push_back(m);
    }
    std::vector<cover::IdentityReport> reports;
    for (int m : moduli) {
      for (auto& r : cover::run_identity_suite(m, c.samples, c.seed, c.tol)) reports.push_back(r);
    }
    if (c.format == "csv") {
      out << "identity,m,samples,max_residual,pass\n";
      for (const auto& r : reports) {
        out << r.identity << ',' << r.m << ',' << r.samples << ',' << r.max_residual << ','
            << (r.pass ? "true" : "false") << '\n';
      }
    } else {
      json arr = json::array();
      for (const auto& r : reports) {
        arr.push_back({{"identity", r.identity},
                       {"m", r.m},
                       {"samples", r.samples},
                       {"max_residual", r.max_residual},
                       {"pass", r.pass}});
      }
      out << arr.dump(2) << '\n';
    }
    bool ok = true;
    for (const auto& r : reports) {
      if (!r.pass) {
        ok = false;
        err << "identity " << r.identity << " failed for m=" << r.m << ": " << r.failure << '\n';
      }
    }
    return ok ? kExitOk : kExitVerificationFailure;
  }
  if (sub == "enumerate") {
    const TopologicalType type = explicit_type(c);
    if (!c.m) throw UsageError("--m is required");
    const SpinModulus m = modulus(*c.m);
    if (c.n) {
      const auto ns = admissible_n_values(type);
      if (std::find(ns.begin(), ns.end(), *c.n) == ns.end()) {
        throw UsageError("n=" + std::to_string(*c.n) + " is not admissible for this type");
      }
    }
    RealArfStream stream(type, m, c.n);
    const bool csv = c.format == "csv";
    if (csv) out << "m,g,k,eps,n,alpha,beta,gamma,delta,gamma_n,arf_invariant\n";
    long long emitted = 0;
    while (!c.limit || emitted < *c.limit) {
      auto f = stream.next();
      if (!f) break;
      ++emitted;
      if (csv) {
        const auto& v = f->values;
        out << m.value() << ',' << type.g() << ',' << type.k() << ',' << type.eps() << ','
            << v.decomp.n << ',' << join(v.alpha) << ',' << join(v.beta) << ',' << join(v.gamma)
            << ',' << join(v.delta) << ',' << f->gamma_n << ',' << f->arf_invariant << '\n';
      } else {
        out << to_json(*f).dump() << '\n';
      }
    }
    return kExitOk;
  }
  throw UsageError("unknown subcommand " + sub);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Real m-Arf functions on Klein surfaces and the m-fold cover of Aut(H)", "arfspin"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output,-o", c.output, "write results to this file");
  };
  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--g", c.g, "genus");
    sub->add_option("--k", c.k, "number of ovals");
    sub->add_option("--eps", c.eps, "1 separating, 0 non-separating");
  };

  auto* counts = app.add_subcommand("counts", "closed-form counts N(g,k,eps,m,delta)");
  add_type(counts);
  counts->add_option("--m", c.m, "spin modulus");
  counts->add_option("--g-max", c.g_max, "range mode: largest genus");
  counts->add_option("--m-max", c.m_max, "range mode: largest modulus");
  add_format(counts);

  auto* verify = app.add_subcommand("verify", "brute-force counts against the closed forms");
  verify->add_option("--g-max", c.g_max, "largest genus")->required();
  verify->add_option("--m-max", c.m_max, "largest modulus")->required();
  verify->add_option("--threads", c.threads, "worker threads (default ARFSPIN_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  add_format(verify);

  auto* cover_check = app.add_subcommand("cover-check", "randomized identity checks in G_m");
  cover_check->add_option("--m", c.m, "modulus (default: 2..6)");
  cover_check->add_option("--samples", c.samples, "samples per identity");
  cover_check->add_option("--seed", c.seed, "random seed");
  cover_check->add_option("--tol", c.tol, "residual tolerance");
  add_format(cover_check);

  auto* enumerate = app.add_subcommand("enumerate", "list real m-Arf functions of one type");
  add_type(enumerate);
  enumerate->add_option("--m", c.m, "spin modulus");
  enumerate->add_option("--n", c.n, "number of invariant curves (default canonical)");
  enumerate->add_option("--limit", c.limit, "stop after this many functions");
  add_format(enumerate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  try {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!c.output.empty()) {
      file.open(c.output);
      if (!file) throw UsageError("cannot open " + c.output + " for writing");
      sink = &file;
    }
    return dispatch(sub, c, *sink, err);
  } catch (const UsageError& e) {
    err << "arfspin " << sub << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "arfspin " << sub << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const OutOfScopeError& e) {
    err << "arfspin " << sub << ": " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"arfspin"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace arfspin::cli
