#pragma once

// Test-only reference. Shares no code with the library beyond plain ints:
// walks the whole product space (alpha, beta, gamma, delta) with a naive
// odometer, applies the realness conditions as written down for halves of a
// symmetric decomposition, and takes the Arf parity over all 2h + (n-1)
// closed-surface handle pairs including the primed copies.

#include <cstdint>
#include <vector>

namespace oracle {

struct Cell {
  int g, k, eps, m, n;
};

struct Counts {
  std::uint64_t total = 0;
  std::uint64_t even = 0;
  std::uint64_t odd = 0;
  bool operator==(const Counts&) const = default;
};

inline int mod(long long x, int m) {
  const long long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

inline bool half_period(int x, int m) { return mod(2LL * x, m) == 0; }

inline bool genus_ok(int g, int m) {
  const int p = m % 2 == 0 ? m / 2 : m;
  return mod(g - 1, p) == 0;
}

// gamma holds c_1..c_{n-1}; curves 1..k are ovals.
inline bool real(const Cell& c, const std::vector<int>& gamma) {
  if (!genus_ok(c.g, c.m)) return false;
  long long sum = 0;
  for (int i = 0; i < c.n - 1; ++i) {
    const int x = gamma[static_cast<std::size_t>(i)];
    const bool oval = i < c.k;
    if (oval && !half_period(x, c.m)) return false;
    if (!oval && x != 0) return false;
    sum += x;
  }
  const int last = mod(1LL - c.g - sum, c.m);
  if (c.eps == 1) return half_period(last, c.m);
  // Non-separating: the last curve is a twist, and the oval values sum to 1 - g.
  long long ovals = 0;
  for (int i = 0; i < c.k; ++i) ovals += gamma[static_cast<std::size_t>(i)];
  return last == 0 && mod(ovals - (1LL - c.g), c.m) == 0;
}

inline int compact_parity(int h, const std::vector<int>& a, const std::vector<int>& b,
                          const std::vector<int>& gamma, const std::vector<int>& delta) {
  int s = 0;
  for (int copy = 0; copy < 2; ++copy) {
    for (int i = 0; i < h; ++i) {
      s += (1 - a[static_cast<std::size_t>(i)]) * (1 - b[static_cast<std::size_t>(i)]);
    }
  }
  for (std::size_t i = 0; i < gamma.size(); ++i) s += (1 - gamma[i]) * (1 - delta[i]);
  return mod(s, 2);
}

inline bool step(std::vector<int>& digits, int m) {
  for (auto& d : digits) {
    if (++d < m) return true;
    d = 0;
  }
  return false;
}

inline Counts count(const Cell& c) {
  const int h = (c.g + 1 - c.n) / 2;
  const auto sz = static_cast<std::size_t>(2 * h + 2 * (c.n - 1));
  std::vector<int> digits(sz, 0);
  Counts out;
  do {
    std::vector<int> a(digits.begin(), digits.begin() + h);
    std::vector<int> b(digits.begin() + h, digits.begin() + 2 * h);
    std::vector<int> gamma(digits.begin() + 2 * h, digits.begin() + 2 * h + (c.n - 1));
    std::vector<int> delta(digits.begin() + 2 * h + (c.n - 1), digits.end());
    if (!real(c, gamma)) continue;
    ++out.total;
    const int p = c.m % 2 == 0 ? compact_parity(h, a, b, gamma, delta) : 0;
    (p ? out.odd : out.even) += 1;
  } while (step(digits, c.m));
  return out;
}

}  // namespace oracle
