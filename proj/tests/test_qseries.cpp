#include <doctest.h>

#include <random>

#include <omp.h>

#include "etaq/qseries.hpp"
#include "oracles.hpp"

using namespace etaq;

namespace {

Series S(std::initializer_list<long> v) {
  Series out;
  for (long x : v)
    out.emplace_back(x);
  return out;
}

Series from_ints(const std::vector<std::int64_t>& v) {
  Series out;
  for (auto x : v)
    out.emplace_back(static_cast<long>(x));
  return out;
}

// Pochhammer-style (q;q)_infinity^2 substituted q -> q^step, truncated at K.
Series eta_squared_dilated(std::int64_t step, std::size_t K) {
  Series euler = eta_factor_series({1, 0}, 1, K); // prod (1 - q^m)
  Series sq = series_mul(euler, euler, K);
  Series out(K + 1);
  for (std::size_t i = 0; i * static_cast<std::size_t>(step) <= K; ++i)
    out[i * static_cast<std::size_t>(step)] = sq[i];
  return out;
}

} // namespace

TEST_SUITE("qseries") {

TEST_CASE("series_mul") {
  Series geometric(6, BigInt(1));
  CHECK(series_mul(S({1, -1}), geometric, 5) == S({1, 0, 0, 0, 0, 0}));
  CHECK(series_mul(S({1, 1}), S({1, 1}), 2) == S({1, 2, 1}));
  CHECK(serial::series_mul(S({1, 1}), S({1, 1}), 2) == S({1, 2, 1}));
}

TEST_CASE("series_inverse") {
  CHECK(series_inverse(S({1, -1, 0, 0}), 3) == S({1, 1, 1, 1}));
  CHECK(series_inverse(S({1, 0, 0}), 2) == S({1, 0, 0}));
  CHECK_THROWS_AS(series_inverse(S({2, 1}), 3), std::domain_error);
  auto euler = eta_factor_series({1, 0}, 1, 6);
  CHECK(series_inverse(euler, 6) == S({1, 1, 2, 3, 5, 7, 11}));
  CHECK(series_inverse(S({-1, 1}), 3) == S({-1, -1, -1, -1}));
}

TEST_CASE("series inverse round trip on random unit series") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coef(-50, 50);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t K = 40;
    Series s(K + 1);
    s[0] = trial % 2 ? 1 : -1;
    for (std::size_t i = 1; i <= K; ++i)
      s[i] = coef(rng);
    Series one(K + 1);
    one[0] = 1;
    CHECK(series_mul(s, series_inverse(s, K), K) == one);
  }
}

TEST_CASE("series_mul is commutative and associative; parallel matches serial") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coef(-9, 9);
  auto random_series = [&](std::size_t n) {
    Series s(n);
    for (auto& x : s)
      x = coef(rng);
    return s;
  };
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t K = 25;
    auto a = random_series(K + 1), b = random_series(K - 3), c = random_series(K + 1);
    CHECK(series_mul(a, b, K) == series_mul(b, a, K));
    CHECK(series_mul(series_mul(a, b, K), c, K) == series_mul(a, series_mul(b, c, K), K));
    CHECK(series_mul(a, c, K) == serial::series_mul(a, c, K));
  }
}

TEST_CASE("eta_factor_series") {
  CHECK(eta_factor_series({5, 1}, -2, 6) == S({1, 1, 1, 1, 2, 2, 3}));
  CHECK(eta_factor_series({5, 2}, -2, 6) == S({1, 0, 1, 1, 1, 1, 2}));
  // (q;q)^2 by brute force: (1-q)^2 (1-q^2)^2 (1-q^3)^2 to q^3
  auto brute = oracle::naive_product({{1, 2}, {2, 2}, {3, 2}}, 3);
  CHECK(brute == S({1, -2, -1, 2}));
  CHECK(eta_factor_series({1, 0}, 2, 3) == brute);
}

TEST_CASE("apply_binomial_factor: dense and unit-pass paths agree with naive products") {
  // three threads force the per-chain split even on a single core
  const int saved = omp_get_max_threads();
  for (int threads : {1, 3}) {
  omp_set_num_threads(threads);
  for (std::int64_t e : {-7, -3, -1, 1, 2, 5, 9})
    for (std::size_t step : {1, 2, 5, 13, 70, 130}) {
      const std::size_t K = 200;
      Series s(K + 1);
      s[0] = 1;
      s[3] = -2;
      s[10] = 5;
      apply_binomial_factor(s, step, e);
      auto ref = oracle::naive_product({{static_cast<std::int64_t>(step), static_cast<int>(e)}}, K);
      Series seed(K + 1);
      seed[0] = 1;
      seed[3] = -2;
      seed[10] = 5;
      CHECK(s == serial::series_mul(seed, ref, K));
    }
  }
  omp_set_num_threads(saved);
}

TEST_CASE("expand of the named functions") {
  auto eta_inv = expand(EtaQuotientSpec::single(1, 1, 0, -1, 2), 6);
  CHECK(eta_inv.prefix == Rational(-1, 24));
  CHECK(eta_inv.coeffs == from_ints(oracle::partition_counts(6, [](auto) { return true; })));
  CHECK(eta_inv.coeffs == S({1, 1, 2, 3, 5, 7, 11}));

  auto schur = expand(EtaQuotientSpec::single(6, 6, 1, -1), 6);
  CHECK(schur.prefix == Rational(-1, 12));
  CHECK(schur.coeffs == S({1, 1, 1, 1, 1, 2, 2}));

  auto rr = expand(EtaQuotientSpec::single(5, 5, 1, -1), 6);
  CHECK(rr.prefix == Rational(-1, 60));
  CHECK(rr.coeffs == S({1, 1, 1, 1, 2, 2, 3}));

  CHECK(expand(EtaQuotientSpec::single(5, 5, 1, -1), 0).coeffs == S({1}));
}

TEST_CASE("expand counts restricted partitions") {
  for (std::int64_t delta = 2; delta <= 9; ++delta)
    for (std::int64_t g = 1; 2 * g < delta; ++g) {
      auto e = expand(EtaQuotientSpec::single(delta, delta, g, -1), 30);
      auto brute = oracle::partition_counts(30, [&](std::int64_t part) {
        auto r = part % delta;
        return r == g || r == delta - g;
      });
      CHECK(e.coeffs == from_ints(brute));
    }
}

TEST_CASE("eta_{delta,0} = eta(delta z)^2 at K = 60") {
  for (std::int64_t delta = 1; delta <= 6; ++delta) {
    auto e = expand(EtaQuotientSpec::single(delta, delta, 0, 1), 60);
    CHECK(e.prefix == Rational(delta, 12));
    CHECK(e.coeffs == eta_squared_dilated(delta, 60));
  }
}

TEST_CASE("eta_{delta,delta/2} = eta(delta z/2)^2 / eta(delta z)^2 at K = 60") {
  for (std::int64_t delta = 2; delta <= 6; delta += 2) {
    auto e = expand(EtaQuotientSpec::single(delta, delta, delta / 2, 1), 60);
    auto num = eta_squared_dilated(delta / 2, 60);
    auto den = eta_squared_dilated(delta, 60);
    CHECK(e.coeffs == series_mul(num, series_inverse(den, 60), 60));
    CHECK(e.prefix == Rational(delta / 2, 12) - Rational(delta, 12));
  }
}

TEST_CASE("non-positive exponents away from self-paired classes give non-negative coefficients") {
  auto spec = EtaQuotientSpec::from_terms(35, {{5, 1, -1, 1}, {7, 3, -2, 1}, {35, 4, -1, 1}});
  for (const auto& c : expand(spec, 200).coeffs)
    CHECK(c >= 0);
}

TEST_CASE("expansion is stable under truncation; parallel matches serial") {
  auto spec = EtaQuotientSpec::from_terms(
      12, {{12, 5, -1, 1}, {4, 2, 1, 2}, {1, 0, -3, 2}, {6, 1, 2, 1}, {3, 0, 1, 1}});
  auto big = expand(spec, 300);
  auto ref = serial::expand(spec, 300);
  CHECK(big.coeffs == ref.coeffs);
  CHECK(big.prefix == ref.prefix);
  for (std::size_t k : {0u, 1u, 17u, 150u}) {
    auto small = expand(spec, k);
    CHECK(Series(big.coeffs.begin(), big.coeffs.begin() + static_cast<std::ptrdiff_t>(k) + 1) == small.coeffs);
  }
  CHECK(big.coeffs[0] == 1);
}

TEST_CASE("progression_coeffs") {
  auto eta_inv = EtaQuotientSpec::single(1, 1, 0, -1, 2);
  CHECK(progression_coeffs(eta_inv, 24, 5, 4) == S({5, 30, 135, 490, 1575}));
  auto brute = oracle::partition_counts(24, [](auto) { return true; });
  CHECK(progression_coeffs(eta_inv, 24, 5, 4) ==
        from_ints({brute[4], brute[9], brute[14], brute[19], brute[24]}));
  auto rr = EtaQuotientSpec::single(5, 5, 1, -1);
  CHECK(progression_coeffs(rr, 6, 5, 4) == S({2}));
  CHECK(progression_coeffs(rr, 6, 1, 0) == expand(rr, 6).coeffs);
  CHECK_THROWS_AS(progression_coeffs(rr, 6, 5, 5), std::invalid_argument);
}

TEST_CASE("partition numbers past 64 bits") {
  auto e = expand(EtaQuotientSpec::single(1, 1, 0, -1, 2), 500);
  CHECK(e.coeffs[100] == BigInt("190569292"));
  CHECK(e.coeffs[500] == BigInt("2300165032574323995027"));
}

}
