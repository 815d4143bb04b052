#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

namespace oracle {

// Number of partitions of n into parts satisfying allowed(part), by
// recursive enumeration of non-increasing part sequences.
inline std::int64_t count_partitions(std::int64_t n, std::int64_t max_part,
                                     const std::function<bool(std::int64_t)>& allowed) {
  if (n == 0)
    return 1;
  std::int64_t total = 0;
  for (std::int64_t part = std::min(n, max_part); part >= 1; --part)
    if (allowed(part))
      total += count_partitions(n - part, part, allowed);
  return total;
}

inline std::vector<std::int64_t> partition_counts(std::int64_t K,
                                                  const std::function<bool(std::int64_t)>& allowed) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 0; n <= K; ++n)
    out.push_back(count_partitions(n, n, allowed));
  return out;
}

// Expand prod (1 - q^m)^{e_m} one linear factor at a time by schoolbook
// polynomial multiplication and geometric-series division.
inline std::vector<mpz_class> naive_product(const std::vector<std::pair<std::int64_t, int>>& factors,
                                            std::int64_t K) {
  std::vector<mpz_class> s(static_cast<std::size_t>(K + 1));
  s[0] = 1;
  for (auto [m, e] : factors) {
    for (int rep = 0; rep < (e < 0 ? -e : e); ++rep) {
      std::vector<mpz_class> f(static_cast<std::size_t>(K + 1));
      if (e > 0) {
        f[0] = 1;
        if (m <= K)
          f[static_cast<std::size_t>(m)] = -1;
      } else {
        for (std::int64_t i = 0; i <= K; i += m)
          f[static_cast<std::size_t>(i)] = 1;
      }
      std::vector<mpz_class> out(static_cast<std::size_t>(K + 1));
      for (std::int64_t i = 0; i <= K; ++i)
        for (std::int64_t j = 0; i + j <= K; ++j)
          out[static_cast<std::size_t>(i + j)] += s[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(j)];
      s = out;
    }
  }
  return s;
}

inline std::int64_t brute_inverse(std::int64_t a, std::int64_t n) {
  for (std::int64_t b = 1; b < n; ++b)
    if (((a % n + n) % n) * b % n == 1 % n)
      return b;
  return -1;
}

// Legendre symbol for an odd prime l by enumerating squares.
inline int legendre_by_squares(std::int64_t a, std::int64_t l) {
  std::int64_t r = ((a % l) + l) % l;
  if (r == 0)
    return 0;
  for (std::int64_t x = 1; x < l; ++x)
    if (x * x % l == r)
      return 1;
  return -1;
}

} // namespace oracle
