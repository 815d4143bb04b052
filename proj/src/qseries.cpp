#include "etaq/qseries.hpp"

#include <algorithm>
#include <omp.h>
#include <stdexcept>

namespace etaq {

namespace {

// Below this stride the chains are too few to be worth a parallel region.
constexpr std::size_t kParallelStride = 64;

const BigInt& at_or_zero(const Series& s, std::size_t i) {
  static const BigInt zero{0};
  return i < s.size() ? s[i] : zero;
}

Series padded(const Series& s, std::size_t K) {
  Series out(K + 1);
  for (std::size_t i = 0; i <= K && i < s.size(); ++i)
    out[i] = s[i];
  return out;
}

// Multiplies the chain s[r], s[r+step], ... by (1 - x)^e.
void apply_to_chain(Series& s, std::size_t r, std::size_t step, std::int64_t e,
                    const std::vector<BigInt>& binom) {
  const std::size_t K = s.size() - 1;
  const std::size_t len = (K - r) / step + 1;
  auto at = [&](std::size_t j) -> BigInt& { return s[r + j * step]; };

  if (!binom.empty()) {
    // dense binomial expansion; descending so lower entries are still old
    BigInt acc;
    for (std::size_t j = len; j-- > 0;) {
      acc = 0;
      std::size_t kmax = std::min<std::size_t>(j, binom.size() - 1);
      for (std::size_t k = 0; k <= kmax; ++k)
        mpz_addmul(acc.get_mpz_t(), binom[k].get_mpz_t(), at(j - k).get_mpz_t());
      at(j) = acc;
    }
    return;
  }
  if (e > 0) {
    for (std::int64_t pass = 0; pass < e; ++pass)
      for (std::size_t j = len; j-- > 1;)
        at(j) -= at(j - 1);
  } else {
    for (std::int64_t pass = 0; pass < -e; ++pass)
      for (std::size_t j = 1; j < len; ++j)
        at(j) += at(j - 1);
  }
}

// Coefficients of (1 - x)^e up to x^{len-1}.
std::vector<BigInt> binomial_coeffs(std::int64_t e, std::size_t len) {
  std::vector<BigInt> b;
  if (e > 0) {
    std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(e) + 1, len);
    b.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      mpz_bin_uiui(b[k].get_mpz_t(), static_cast<unsigned long>(e), k);
      if (k % 2)
        b[k] = -b[k];
    }
  } else {
    auto f = static_cast<unsigned long>(-e);
    b.resize(len);
    for (std::size_t k = 0; k < len; ++k)
      mpz_bin_uiui(b[k].get_mpz_t(), k + f - 1, f - 1);
  }
  return b;
}

std::vector<std::size_t> class_members(ClassKey key, std::size_t K, bool second_class) {
  std::vector<std::size_t> out;
  auto d = static_cast<std::size_t>(key.delta);
  std::size_t start = second_class ? d - static_cast<std::size_t>(key.g)
                                   : static_cast<std::size_t>(key.g);
  if (start == 0)
    start = d;
  for (std::size_t m = start; m <= K; m += d)
    out.push_back(m);
  return out;
}

// (step, exponent) pairs making up the product part of eta_{delta,g}^r.
std::vector<std::pair<std::size_t, std::int64_t>> factor_plan(ClassKey key,
                                                              std::int64_t doubled,
                                                              std::size_t K) {
  std::vector<std::pair<std::size_t, std::int64_t>> plan;
  if (key.self_paired()) {
    for (auto m : class_members(key, K, false))
      plan.emplace_back(m, doubled);
  } else {
    for (int side = 0; side < 2; ++side)
      for (auto m : class_members(key, K, side == 1))
        plan.emplace_back(m, doubled / 2);
  }
  return plan;
}

} // namespace

void apply_binomial_factor(Series& s, std::size_t step, std::int64_t e) {
  if (e == 0 || s.empty() || step == 0 || step >= s.size())
    return;
  const std::size_t K = s.size() - 1;
  const std::size_t max_len = K / step + 1;
  // unit passes cost len*|e|; the dense expansion costs len*min(|e|, len)
  // for e > 0 and len^2 for e < 0
  std::vector<BigInt> binom;
  const auto mag = static_cast<std::size_t>(e > 0 ? e : -e);
  if (mag > max_len)
    binom = binomial_coeffs(e, max_len);
  if (binom.empty() && (step < kParallelStride || omp_get_max_threads() == 1)) {
    // contiguous sweeps; the chain split only pays off with threads to spread it over
    for (std::size_t pass = 0; pass < mag; ++pass) {
      if (e > 0)
        for (std::size_t i = K; i >= step; --i)
          s[i] -= s[i - step];
      else
        for (std::size_t i = step; i <= K; ++i)
          s[i] += s[i - step];
    }
    return;
  }
  const auto chains = static_cast<std::int64_t>(step);
#pragma omp parallel for schedule(dynamic, 8) if (step >= kParallelStride)
  for (std::int64_t r = 0; r < chains; ++r)
    apply_to_chain(s, static_cast<std::size_t>(r), step, e, binom);
}

Series series_mul(const Series& a, const Series& b, std::size_t K) {
  Series out(K + 1);
  const auto n = static_cast<std::int64_t>(K);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t k = 0; k <= n; ++k) {
    BigInt acc;
    for (std::int64_t i = 0; i <= k; ++i) {
      const auto& x = at_or_zero(a, static_cast<std::size_t>(i));
      if (sgn(x) == 0)
        continue;
      const auto& y = at_or_zero(b, static_cast<std::size_t>(k - i));
      mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    }
    out[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return out;
}

Series series_inverse(const Series& s, std::size_t K) {
  if (s.empty() || (s[0] != 1 && s[0] != -1))
    throw std::domain_error("series_inverse: constant term must be +1 or -1");
  const BigInt& lead = s[0];
  Series t(K + 1);
  t[0] = lead;
  BigInt acc;
  for (std::size_t k = 1; k <= K; ++k) {
    acc = 0;
    for (std::size_t i = 1; i <= k && i < s.size(); ++i)
      mpz_addmul(acc.get_mpz_t(), s[i].get_mpz_t(), t[k - i].get_mpz_t());
    // lead^{-1} == lead
    t[k] = -acc * lead;
  }
  return t;
}

Series eta_factor_series(ClassKey key, std::int64_t doubled_exponent, std::size_t K) {
  Series s(K + 1);
  s[0] = 1;
  for (auto [m, e] : factor_plan(key, doubled_exponent, K))
    apply_binomial_factor(s, m, e);
  return s;
}

QExpansion expand(const EtaQuotientSpec& spec, std::size_t K) {
  QExpansion out{leading_exponent(spec), Series(K + 1)};
  out.coeffs[0] = 1;
  for (const auto& [key, doubled] : spec.doubled_terms())
    for (auto [m, e] : factor_plan(key, doubled, K))
      apply_binomial_factor(out.coeffs, m, e);
  return out;
}

std::vector<BigInt> progression_coeffs(const QExpansion& expansion, std::int64_t m,
                                       std::int64_t t) {
  if (m < 1 || t < 0 || t >= m)
    throw std::invalid_argument("progression_coeffs: need m >= 1 and 0 <= t < m");
  std::vector<BigInt> out;
  for (auto n = static_cast<std::size_t>(t); n < expansion.coeffs.size();
       n += static_cast<std::size_t>(m))
    out.push_back(expansion.coeffs[n]);
  return out;
}

std::vector<BigInt> progression_coeffs(const EtaQuotientSpec& spec, std::size_t K,
                                       std::int64_t m, std::int64_t t) {
  return progression_coeffs(expand(spec, K), m, t);
}

namespace serial {

Series series_mul(const Series& a, const Series& b, std::size_t K) {
  Series x = padded(a, K), y = padded(b, K), out(K + 1);
  for (std::size_t i = 0; i <= K; ++i)
    for (std::size_t j = 0; i + j <= K; ++j)
      out[i + j] += x[i] * y[j];
  return out;
}

QExpansion expand(const EtaQuotientSpec& spec, std::size_t K) {
  QExpansion out{leading_exponent(spec), Series(K + 1)};
  auto& s = out.coeffs;
  s[0] = 1;
  for (const auto& [key, doubled] : spec.doubled_terms()) {
    for (std::size_t m = 1; m <= K; ++m) {
      std::int64_t r = static_cast<std::int64_t>(m) % key.delta;
      int hits = (r == key.g) + (r == mod_floor(-key.g, key.delta));
      if (hits == 0)
        continue;
      // hits == 2 exactly when the class is self-paired: (1-q^m)^{2r}
      std::int64_t e = hits == 2 ? doubled : doubled / 2;
      for (std::int64_t pass = 0; pass < (e < 0 ? -e : e); ++pass) {
        if (e > 0)
          for (std::size_t i = K; i >= m; --i)
            s[i] -= s[i - m];
        else
          for (std::size_t i = m; i <= K; ++i)
            s[i] += s[i - m];
      }
    }
  }
  return out;
}

} // namespace serial

} // namespace etaq
