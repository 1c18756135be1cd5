#pragma once

// Independent reference implementations for tests. Nothing here calls into the
// library's series or partition code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

/// p(0..n) by Euler's pentagonal number recurrence.
inline std::vector<long long> partition_numbers(int n) {
  std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long long total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long long sign = k % 2 ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) total += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = total;
  }
  return p;
}

inline long long divisors_where(int n, const std::function<long long(int)>& weight) {
  long long total = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) total += weight(d);
  return total;
}

inline long long d(int n) { return divisors_where(n, [](int) { return 1; }); }
inline long long d_odd(int n) { return divisors_where(n, [](int x) { return x % 2; }); }
inline long long d_even(int n) { return divisors_where(n, [](int x) { return 1 - x % 2; }); }
inline long long d81(int n) {
  return divisors_where(n, [](int x) {
    const int r = x % 8;
    return (r == 1 || r == 7) ? 1LL : (r == 3 || r == 5) ? -1LL : 0LL;
  });
}

/// Every partition of n (weakly decreasing), by plain recursion.
inline void partitions(int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int max_part) {
    if (rem == 0) {
      visit(cur);
      return;
    }
    for (int k = std::min(rem, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(rem - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
}

/// Dense integer power series truncated at N.
struct Series {
  std::vector<long long> c;
  explicit Series(int N, long long c0 = 0) : c(static_cast<std::size_t>(N) + 1, 0) { c[0] = c0; }
  int order() const { return static_cast<int>(c.size()) - 1; }

  Series operator*(const Series& o) const {
    Series r(order());
    for (int i = 0; i <= order(); ++i)
      if (c[i])
        for (int j = 0; i + j <= order(); ++j) r.c[i + j] += c[i] * o.c[j];
    return r;
  }
  Series& operator+=(const Series& o) {
    for (int i = 0; i <= order(); ++i) c[i] += o.c[i];
    return *this;
  }
  /// Times (1 + s q^k).
  Series& times_binomial(long long s, int k) {
    for (int i = order(); i >= k; --i) c[i] += s * c[i - k];
    return *this;
  }
  /// Divided by (1 - s q^k), s = ±1, k >= 1.
  Series& over_binomial(long long s, int k) {
    for (int i = k; i <= order(); ++i) c[i] += s * c[i - k];
    return *this;
  }
};

/// Deterministic RNG for property tests.
inline std::mt19937_64& rng() {
  static std::mt19937_64 g(0x5eedULL);
  return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

}  // namespace oracle
