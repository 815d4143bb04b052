#include <doctest.h>

#include <numeric>
#include <random>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "etaq/transform.hpp"

using namespace etaq;

namespace {

const EtaQuotientSpec eta_inv = EtaQuotientSpec::single(1, 1, 0, -1, 2);
const EtaQuotientSpec rr1 = EtaQuotientSpec::single(5, 5, 1, -1);

// Random element of Gamma0(level) with 1 <= a and |entries| <= bound.
IntegerMatrix2x2 random_gamma0(std::mt19937_64& rng, std::int64_t level, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> pick(1, bound);
  for (;;) {
    std::int64_t c = level * (pick(rng) % (bound / level) + 1) * (pick(rng) % 2 ? 1 : -1);
    std::int64_t a = pick(rng);
    if (std::gcd(a, c) != 1)
      continue;
    // brute-force search for d with a d = 1 mod |c|, then b = (a d - 1)/c
    std::int64_t cc = c < 0 ? -c : c;
    std::int64_t d = 0;
    for (std::int64_t x = 1; x <= cc; ++x)
      if ((a % cc) * x % cc == 1 % cc) {
        d = x;
        break;
      }
    if ((a * d - 1) % c != 0)
      continue;
    std::int64_t b = (a * d - 1) / c;
    if (b > bound || b < -bound)
      continue;
    return IntegerMatrix2x2::make(a, b, c, d);
  }
}

Real eta_at_i() {
  using boost::math::constants::pi;
  return boost::math::tgamma(Real(0.25)) / (2 * pow(pi<Real>(), Real(0.75)));
}

} // namespace

TEST_SUITE("transform") {

TEST_CASE("matrix predicates") {
  auto A = IntegerMatrix2x2::make(7, 1, 48, 7);
  CHECK(A.in_gamma0(12));
  CHECK(A.in_gamma0(48));
  CHECK_FALSE(A.in_gamma1(12));
  CHECK(IntegerMatrix2x2::make(13, 2, 84, 13).in_gamma1(12));
  CHECK_THROWS_AS(IntegerMatrix2x2::make(1, 1, 1, 1), std::invalid_argument);
  CHECK((A * IntegerMatrix2x2::identity()) == A);
}

TEST_CASE("sawtooth") {
  CHECK(sawtooth(Rational(0)) == Rational(0));
  CHECK(sawtooth(Rational(1, 4)) == Rational(-1, 4));
  CHECK(sawtooth(Rational(3, 2)) == Rational(0));
  CHECK(sawtooth(Rational(5)) == Rational(0));
  CHECK(sawtooth(Rational(-1, 4)) == Rational(1, 4));
}

TEST_CASE("mu_simplified") {
  for (std::int64_t delta = 1; delta <= 6; ++delta)
    for (std::int64_t g = 0; g < delta; ++g) {
      CHECK(mu_simplified(IntegerMatrix2x2::identity(), g, delta) == Rational(0));
      CHECK(mu_simplified(IntegerMatrix2x2::translation(1), g, delta) ==
            rational_mod1(Rational(delta, 2) * bernoulli_p2(Rational(g, delta))));
    }
  CHECK(mu_simplified(IntegerMatrix2x2::translation(1), 0, 1) == Rational(1, 12));
  CHECK_THROWS_AS(mu_simplified(IntegerMatrix2x2::make(1, 0, 6, 1), 0, 1), std::domain_error);
  CHECK_THROWS_AS(mu_simplified(IntegerMatrix2x2::identity(), 5, 5), std::invalid_argument);
}

TEST_CASE("mu_exact") {
  for (std::int64_t delta = 1; delta <= 6; ++delta)
    for (std::int64_t g = 0; g < delta; ++g) {
      CHECK(mu_exact(IntegerMatrix2x2::identity(), g, delta) == Rational(0));
      CHECK(mu_exact(IntegerMatrix2x2::translation(1), g, delta) ==
            Rational(delta, 2) * bernoulli_p2(Rational(g, delta)));
    }
  CHECK_THROWS_AS(mu_exact(IntegerMatrix2x2::make(-1, 0, 0, -1), 0, 1), std::domain_error);
  CHECK_THROWS_AS(mu_exact(IntegerMatrix2x2::make(1, 0, 3, 1), 0, 2), std::domain_error);
}

TEST_CASE("exact and simplified multipliers agree on random Gamma0(12 delta)") {
  std::mt19937_64 rng(2024);
  for (std::int64_t delta = 1; delta <= 6; ++delta)
    for (int i = 0; i < 40; ++i) {
      auto A = random_gamma0(rng, 12 * delta, 3000);
      for (std::int64_t g = 0; g < delta; ++g) {
        Rational ex = mu_exact(A, g, delta);
        CHECK(rational_mod1(ex) == mu_simplified(A, g, delta));
        CHECK(BigInt(12 * delta) % ex.den() == 0);
      }
    }
}

TEST_CASE("eta_eval_numeric") {
  Complex i(0, 1);
  Real expected = eta_at_i() * eta_at_i();
  CHECK(abs(eta_eval_numeric(1, 0, i, 200) - Complex(expected)) < Real(1e-40));
  CHECK(abs(Complex(expected) - Complex(Real("0.590170299508048"))) < Real(1e-14));
  CHECK(abs(eta_eval_numeric(5, 1, i, 200)) > Real(0));

  Complex z(Real("0.137"), Real("0.61"));
  for (std::int64_t delta = 1; delta <= 6; ++delta)
    CHECK(abs(eta_eval_numeric(delta, 0, z) - eta_eval_numeric(1, 0, z * Real(delta))) < Real(1e-40));

  CHECK_THROWS_AS(eta_eval_numeric(1, 0, Complex(0, Real("0.3"))), std::domain_error);
  CHECK_THROWS_AS(eta_eval_numeric(1, 0, i, 5), std::domain_error);
}

TEST_CASE("verify_transformation") {
  Complex i(0, 1);
  CHECK(verify_transformation(1, 0, IntegerMatrix2x2::identity(), i) < Real(1e-40));
  CHECK(verify_transformation(1, 0, IntegerMatrix2x2::translation(1), i) < Real(1e-8));

  // A in Gamma0(60), z placed so that Im(Az) ~ 0.6
  auto A = IntegerMatrix2x2::make(1, 0, 60, 1);
  Complex z(Real(-1) / 60 + Real("0.00001"), Real(1) / (60 * 60 * Real("0.6")));
  NumericOptions opts;
  opts.floor = 1e-5;
  CHECK(A.act(z).imag() > Real("0.5"));
  CHECK(verify_transformation(5, 1, A, z, 0, opts) < Real(1e-8));
  CHECK(verify_transformation(5, 4, A, z, 0, opts) < Real(1e-8));

  // -A acts identically
  CHECK(verify_transformation(5, 1, A.negated(), z, 0, opts) < Real(1e-8));
  CHECK(verify_transformation(5, 0, A.negated(), z, 0, opts) < Real(1e-8));
}

TEST_CASE("transformation corpus generator obeys the point policy") {
  auto corpus = make_transform_corpus(5, 12);
  CHECK(corpus.size() == 12);
  for (const auto& tc : corpus) {
    CHECK(tc.matrix.in_gamma0(12 * tc.delta));
    CHECK(tc.matrix.act(Complex(Real(tc.re), Real(tc.im))).imag() >= Real("0.5"));
  }
  auto again = make_transform_corpus(5, 12);
  CHECK(again.front().re == corpus.front().re);
}

TEST_CASE("average identity") {
  CHECK(average_identity_check(eta_inv, 1, 0, Complex(0, 2), 50) < Real(1e-40));
  CHECK(average_identity_check(eta_inv, 5, 4, Complex(0, 2), 600) < Real(1e-8));
  CHECK(average_identity_check(rr1, 7, 3, Complex(Real("0.2"), Real(2)), 300) < Real(1e-8));
}

TEST_CASE("Gamma1(24Nm) modulus check") {
  NumericOptions opts;
  opts.floor = 1e-3;
  Complex z(Real("0.01"), Real("1.2"));
  CHECK(gamma1_modulus_check(eta_inv, 5, 4, IntegerMatrix2x2::identity(), z) < Real(1e-40));
  CHECK(gamma1_modulus_check(eta_inv, 5, 4, IntegerMatrix2x2::translation(1), z) < Real(1e-6));

  // 24Nm = 120 for eta^-1 and m = 5
  auto A = IntegerMatrix2x2::make(1, 0, 120, 1);
  Complex w(Real(-1) / 120 + Real("0.001"), Real(1) / 120);
  CHECK(gamma1_modulus_check(eta_inv, 5, 4, A, w, opts) < Real(1e-5));
  auto B = IntegerMatrix2x2::make(121, 1, 120, 1);
  CHECK(gamma1_modulus_check(eta_inv, 5, 4, B, Complex(Real(-1) / 120 + Real("0.002"), Real(1) / 150), opts) <
        Real(1e-5));
  CHECK_THROWS_AS(gamma1_modulus_check(eta_inv, 5, 4, IntegerMatrix2x2::make(1, 0, 60, 1), w, opts),
                  std::domain_error);
  CHECK_THROWS_AS(gamma1_modulus_check(eta_inv, 5, 4, IntegerMatrix2x2::make(7, 1, 48, 7), w, opts),
                  std::domain_error);
}

}
