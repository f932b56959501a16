#include "arfspin/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

#include "arfspin/errors.hpp"
#include "arfspin/kernels.hpp"

namespace arfspin {

namespace {

Decomposition decomposition_for(const TopologicalType& type, std::optional<int> n) {
  return n ? make_decomposition(type, *n) : canonical_decomposition(type);
}

std::vector<int> half_periods(SpinModulus m) {
  if (m.even()) return {0, m.value() / 2};
  return {0};
}

// Number of stored oval values that are free coordinates.
int free_oval_count(const Decomposition& d) {
  const int k = d.type.k();
  if (d.type.separating()) return d.n - 1;
  return k == 0 ? 0 : k - 1;
}

std::uint64_t checked_power(int base, int exponent) {
  std::uint64_t out = 1;
  for (int i = 0; i < exponent; ++i) {
    if (out > (std::uint64_t{1} << 40) / static_cast<std::uint64_t>(base)) {
      throw OutOfScopeError("value-set space too large for exhaustive enumeration");
    }
    out *= static_cast<std::uint64_t>(base);
  }
  return out;
}

// Bit j of entry t is set iff digit j of t (base m, digit 0 least significant) is even.
std::vector<std::uint32_t> even_digit_masks(int m, int length) {
  const std::uint64_t count = checked_power(m, length);
  std::vector<std::uint32_t> masks(count);
  for (std::uint64_t t = 0; t < count; ++t) {
    std::uint64_t rest = t;
    std::uint32_t mask = 0;
    for (int j = 0; j < length; ++j) {
      if ((rest % static_cast<std::uint64_t>(m)) % 2 == 0) mask |= std::uint32_t{1} << j;
      rest /= static_cast<std::uint64_t>(m);
    }
    masks[t] = mask;
  }
  return masks;
}

// Spreads a handle mask into positions i and h + i (a handle and its primed copy).
std::uint32_t doubled(std::uint32_t mask, int h) { return mask | (mask << h); }

}  // namespace

RealArfStream::RealArfStream(const TopologicalType& type, SpinModulus m, std::optional<int> n)
    : decomp_(decomposition_for(type, n)), m_(m), half_periods_(half_periods(m)) {
  const int h = decomp_.half_genus;
  free_ovals_ = free_oval_count(decomp_);
  radix_.assign(static_cast<std::size_t>(2 * h), m.value());
  radix_.insert(radix_.end(), static_cast<std::size_t>(free_ovals_),
                static_cast<int>(half_periods_.size()));
  radix_.insert(radix_.end(), static_cast<std::size_t>(decomp_.n - 1), m.value());
  digits_.assign(radix_.size(), 0);
  exhausted_ = !spin_admissible(type.g(), m);
}

ArfValueSet RealArfStream::current() const {
  const auto h = static_cast<std::size_t>(decomp_.half_genus);
  const auto bridges = static_cast<std::size_t>(decomp_.n - 1);
  ArfValueSet v{decomp_, m_, {}, {}, std::vector<int>(bridges, 0), {}};
  auto it = digits_.begin();
  v.alpha.assign(it, it + static_cast<std::ptrdiff_t>(h));
  it += static_cast<std::ptrdiff_t>(h);
  v.beta.assign(it, it + static_cast<std::ptrdiff_t>(h));
  it += static_cast<std::ptrdiff_t>(h);
  long long free_sum = 0;
  for (int i = 0; i < free_ovals_; ++i, ++it) {
    v.gamma[static_cast<std::size_t>(i)] = half_periods_[static_cast<std::size_t>(*it)];
    free_sum += v.gamma[static_cast<std::size_t>(i)];
  }
  const int k = decomp_.type.k();
  if (!decomp_.type.separating() && k >= 1) {
    v.gamma[static_cast<std::size_t>(k - 1)] = m_.reduce(1LL - decomp_.type.g() - free_sum);
  }
  v.delta.assign(it, digits_.end());
  return v;
}

bool RealArfStream::advance() {
  for (std::size_t i = digits_.size(); i-- > 0;) {
    if (++digits_[i] < radix_[i]) return true;
    digits_[i] = 0;
  }
  return false;
}

std::optional<RealArfFunction> RealArfStream::next() {
  while (!exhausted_) {
    ArfValueSet v = current();
    exhausted_ = !advance();
    if (validate_real_value_set(v) == Validation::Ok) return complete(std::move(v));
  }
  return std::nullopt;
}

Tally& Tally::operator+=(const Tally& other) {
  total += other.total;
  even += other.even;
  odd += other.odd;
  candidates += other.candidates;
  for (std::size_t i = 0; i < rejected_by.size(); ++i) rejected_by[i] += other.rejected_by[i];
  return *this;
}

Tally tally_stream(RealArfStream& stream) {
  Tally t;
  while (auto f = stream.next()) {
    t.total += 1;
    if (f->arf_invariant) {
      t.odd += 1;
    } else {
      t.even += 1;
    }
  }
  t.candidates = t.total;
  return t;
}

BigInt closed_form_count(const TopologicalType& type, SpinModulus m, int delta) {
  const int g = type.g();
  const int k = type.k();
  const int mv = m.value();
  const BigInt mg = big_pow(mv, static_cast<unsigned>(g));
  if (!m.even()) {
    return (g - 1) % mv == 0 && delta == 0 ? mg : BigInt(0);
  }
  if ((g - 1) % (mv / 2) != 0) return 0;
  // m^g 2^(k-2); exact because m even and g >= 2 give 4 | m^g.
  const auto quarter_scaled = [&] { return BigInt((mg << k) >> 2); };
  if (!type.separating()) {
    if (k == 0) return mg / 2;
    return quarter_scaled();
  }
  if (mv % 4 == 0) return quarter_scaled();
  const BigInt half = mg / 2;
  const BigInt power = BigInt(1) << (k - 1);
  return delta == 0 ? BigInt(half * (power + 1)) : BigInt(half * (power - 1));
}

Tally brute_force_tally(const TopologicalType& type, SpinModulus m, std::optional<int> n,
                        unsigned threads) {
  const Decomposition decomp = decomposition_for(type, n);
  const int mv = m.value();
  const int h = decomp.half_genus;
  const int bridges = decomp.n - 1;
  if (2 * h + bridges > 32) {
    throw OutOfScopeError("genus too large for exhaustive enumeration");
  }

  Tally tally;
  tally.candidates = big_pow(mv, static_cast<unsigned>(2 * h + 2 * bridges));
  const BigInt per_curve_tuple = big_pow(mv, static_cast<unsigned>(2 * h + bridges));

  // Every curve-value tuple; validation only looks at these and the shape.
  std::vector<std::vector<int>> accepted;
  {
    ArfValueSet probe{decomp,
                      m,
                      std::vector<int>(static_cast<std::size_t>(h), 0),
                      std::vector<int>(static_cast<std::size_t>(h), 0),
                      std::vector<int>(static_cast<std::size_t>(bridges), 0),
                      std::vector<int>(static_cast<std::size_t>(bridges), 0)};
    const std::uint64_t tuples = checked_power(mv, bridges);
    for (std::uint64_t t = 0; t < tuples; ++t) {
      std::uint64_t rest = t;
      for (int j = bridges; j-- > 0;) {
        probe.gamma[static_cast<std::size_t>(j)] = static_cast<int>(rest % static_cast<std::uint64_t>(mv));
        rest /= static_cast<std::uint64_t>(mv);
      }
      const Validation code = validate_real_value_set(probe);
      if (code == Validation::Ok) {
        accepted.push_back(probe.gamma);
      } else {
        tally.rejected_by[static_cast<std::size_t>(code)] += per_curve_tuple;
      }
    }
  }
  if (accepted.empty()) return tally;

  tally.total = per_curve_tuple * accepted.size();
  if (!m.even()) {
    tally.even = tally.total;
    return tally;
  }

  // Closed-surface handle pairs: (alpha_i, beta_i) at bit i, the primed copy at
  // bit h + i, and (gamma_i, delta_i) at bit 2h + i. The kernel tail covers
  // (beta, delta); the prefix covers (gamma, alpha).
  const std::vector<std::uint32_t> handle_masks = even_digit_masks(mv, h);
  const std::vector<std::uint32_t> bridge_masks = even_digit_masks(mv, bridges);
  std::vector<std::uint32_t> tail;
  tail.reserve(handle_masks.size() * bridge_masks.size());
  for (std::uint32_t b : handle_masks) {
    for (std::uint32_t d : bridge_masks) tail.push_back(doubled(b, h) | (d << (2 * h)));
  }
  std::vector<std::uint32_t> gamma_bits;
  gamma_bits.reserve(accepted.size());
  for (const auto& gamma : accepted) {
    std::uint32_t mask = 0;
    for (int j = 0; j < bridges; ++j) {
      if (gamma[static_cast<std::size_t>(j)] % 2 == 0) mask |= std::uint32_t{1} << (2 * h + j);
    }
    gamma_bits.push_back(mask);
  }

  const std::uint64_t alpha_count = handle_masks.size();
  const std::uint64_t prefixes = gamma_bits.size() * alpha_count;
  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t odd = 0;
    for (std::uint64_t p = begin; p < end; ++p) {
      const std::uint32_t first = gamma_bits[p / alpha_count] | doubled(handle_masks[p % alpha_count], h);
      odd += kernels::count_odd_pairings(tail, first, 0);
    }
    return odd;
  };

  const std::uint64_t workers =
      std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(prefixes, 1));
  std::vector<std::uint64_t> partial(workers, 0);
  if (workers == 1) {
    partial[0] = run(0, prefixes);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = prefixes * w / workers;
      const std::uint64_t end = prefixes * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] { partial[w] = run(begin, end); });
    }
  }
  BigInt odd = 0;
  for (std::uint64_t x : partial) odd += x;
  tally.odd = odd;
  tally.even = tally.total - odd;
  return tally;
}

CountReport brute_force_counts(const TopologicalType& type, SpinModulus m, std::optional<int> n,
                               unsigned threads) {
  const Decomposition decomp = decomposition_for(type, n);
  CountReport r{type, m.value(), decomp.n, 0, 0, 0, 0, 0, false, {}};
  r.tally = brute_force_tally(type, m, decomp.n, threads);
  r.total = r.tally.total;
  r.even_count = r.tally.even;
  r.odd_count = r.tally.odd;
  r.closed_form_even = closed_form_count(type, m, 0);
  r.closed_form_odd = closed_form_count(type, m, 1);
  r.match = r.even_count == r.closed_form_even && r.odd_count == r.closed_form_odd;
  return r;
}

std::vector<int> verification_n_values(const TopologicalType& type) {
  std::vector<int> out;
  for (int n : admissible_n_values(type)) {
    if (n >= 2 || type.separating()) out.push_back(n);
  }
  return out;
}

std::vector<CountReport> verify_range(int g_max, int m_max, unsigned threads) {
  if (g_max < 2) throw DomainError("g_max must be at least 2");
  if (m_max < 2) throw DomainError("m_max must be at least 2");
  std::vector<CountReport> out;
  for (int g = 2; g <= g_max; ++g) {
    for (const TopologicalType& type : topological_types_of_genus(g)) {
      for (int m = 2; m <= m_max; ++m) {
        for (int n : verification_n_values(type)) {
          out.push_back(brute_force_counts(type, SpinModulus(m), n, threads));
        }
      }
    }
  }
  // Already in (g, k, eps, m, n) order by construction of the loops above.
  return out;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("ARFSPIN_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace arfspin
