#include "etaq/transform.hpp"

#include <random>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

namespace etaq {

namespace {

const Real& two_pi() {
  static const Real v = 2 * boost::math::constants::pi<Real>();
  return v;
}

Complex ipow(Complex base, std::int64_t e) {
  bool invert = e < 0;
  auto n = static_cast<std::uint64_t>(invert ? -e : e);
  Complex result(1);
  while (n) {
    if (n & 1)
      result *= base;
    base *= base;
    n >>= 1;
  }
  return invert ? Complex(1) / result : result;
}

void require_height(const Complex& z, const NumericOptions& options) {
  if (!(z.imag() >= Real(options.floor)))
    throw std::domain_error("truncation unreliable: Im(z) = " + z.imag().str(6) +
                            " is below the floor " + std::to_string(options.floor));
}

// prod over m <= K in the classes +-g mod delta of (1 - q^m); a self-paired
// class is counted twice.
Complex class_product(std::int64_t delta, std::int64_t g, const Complex& q, std::size_t K) {
  const std::int64_t g1 = mod_floor(g, delta);
  const std::int64_t g2 = mod_floor(-g, delta);
  Complex prod(1), qm(1);
  for (std::size_t m = 1; m <= K; ++m) {
    qm *= q;
    auto r = static_cast<std::int64_t>(m % static_cast<std::size_t>(delta));
    if (r == g1)
      prod *= Complex(1) - qm;
    if (r == g2)
      prod *= Complex(1) - qm;
  }
  return prod;
}

Complex series_eval(const std::vector<Real>& coeffs, const Complex& q) {
  // Horner from the top
  Complex acc(0);
  for (std::size_t i = coeffs.size(); i-- > 0;)
    acc = acc * q + coeffs[i];
  return acc;
}

std::vector<Real> real_coeffs(const QExpansion& e) {
  std::vector<Real> out;
  out.reserve(e.coeffs.size());
  for (const auto& c : e.coeffs)
    out.push_back(to_real(c));
  return out;
}

Complex average_with(std::int64_t m, std::int64_t t, const Rational& prefix, const Complex& z,
                     const auto& eval_hr) {
  Complex sum(0);
  const Rational shift = Rational(t) + prefix;
  for (std::int64_t lambda = 0; lambda < m; ++lambda) {
    Complex w = (z + Real(lambda)) / Real(m);
    Real phase = -to_real(Rational(lambda, m) * shift);
    sum += e_of(Complex(phase)) * eval_hr(w);
  }
  return sum / Real(m);
}

} // namespace

IntegerMatrix2x2 IntegerMatrix2x2::make(std::int64_t a, std::int64_t b, std::int64_t c,
                                        std::int64_t d) {
  if (a * d - b * c != 1)
    throw std::invalid_argument("matrix determinant must be 1");
  return {a, b, c, d};
}

Complex IntegerMatrix2x2::act(const Complex& z) const {
  return (Real(a) * z + Real(b)) / (Real(c) * z + Real(d));
}

Complex IntegerMatrix2x2::automorphy(const Complex& z) const { return Real(c) * z + Real(d); }

Rational sawtooth(const Rational& x) {
  if (x.is_integer())
    return Rational(0);
  return rational_mod1(x) - Rational(1, 2);
}

Rational mu_simplified(const IntegerMatrix2x2& A, std::int64_t g, std::int64_t delta) {
  if (delta <= 0 || g < 0 || g >= delta)
    throw std::invalid_argument("mu_simplified: need 0 <= g < delta");
  if (!A.in_gamma0(12 * delta))
    throw std::domain_error("mu_simplified: matrix not in Gamma0(12 delta)");
  Rational ag(BigInt(static_cast<long>(A.a)) * g, BigInt(static_cast<long>(delta)));
  Rational v = Rational(BigInt(static_cast<long>(A.d)) * A.b * delta, BigInt(2)) * bernoulli_p2(ag) -
               Rational(A.a - 1, 4) + Rational(ag.floor(), BigInt(2));
  return rational_mod1(v);
}

Rational mu_exact(const IntegerMatrix2x2& A, std::int64_t g, std::int64_t delta) {
  if (delta <= 0)
    throw std::invalid_argument("mu_exact: delta must be positive");
  if (!A.in_gamma0(delta))
    throw std::domain_error("mu_exact: matrix not in Gamma0(delta)");
  if (A.a <= 0)
    throw std::domain_error(
        "mu_exact: a <= 0; apply a sign normalization first (A and -A act identically)");
  const std::int64_t a = A.a;
  const std::int64_t den = delta * a;
  // sum_{u=1}^{a-1} ((u/a)) ((c u/(delta a) + g/delta)), over the common
  // denominator 4 a (delta a)
  BigInt acc;
  for (std::int64_t u = 1; u < a; ++u) {
    std::int64_t num = mod_floor(static_cast<std::int64_t>(
                                     (static_cast<__int128>(A.c) * u + static_cast<__int128>(g) * a) %
                                     den),
                                 den);
    if (num == 0)
      continue;
    acc += BigInt(static_cast<long>(2 * u - a)) * BigInt(static_cast<long>(2 * num - den));
  }
  Rational sum(acc, BigInt(4 * a) * den);
  Rational ag(BigInt(static_cast<long>(a)) * g, BigInt(static_cast<long>(delta)));
  return sum + Rational(BigInt(static_cast<long>(delta)) * A.b, BigInt(2 * a)) * bernoulli_p2(ag) -
         Rational(BigInt(static_cast<long>(A.c)), BigInt(12) * den);
}

Real to_real(const Rational& x) { return to_real(x.num()) / to_real(x.den()); }

Real to_real(const BigInt& x) {
  if (x.fits_slong_p())
    return Real(x.get_si());
  return Real(x.get_str());
}

Complex e_of(const Complex& w) { return exp(Complex(0, two_pi()) * w); }

std::size_t product_truncation(const Real& y) {
  // |q| = exp(-2 pi y); 40 ln 10 ~ 92.1
  Real k = Real(92.2) / (two_pi() * y);
  return static_cast<std::size_t>(k.convert_to<double>()) + 2;
}

Complex eta_eval_numeric(std::int64_t delta, std::int64_t g, const Complex& z, std::size_t K,
                         const NumericOptions& options) {
  require_height(z, options);
  if (K == 0)
    K = product_truncation(z.imag());
  // |q|^K < 1e-30  <=>  2 pi y K > 30 ln 10
  if (two_pi() * z.imag() * Real(K) < Real(69.08))
    throw std::domain_error("truncation unreliable: K too small for Im(z)");
  Complex q = e_of(z);
  Rational lead = Rational(delta, 2) * bernoulli_p2(Rational(g, delta));
  return e_of(z * to_real(lead)) * class_product(delta, g, q, K);
}

Complex eta_quotient_eval_numeric(const EtaQuotientSpec& spec, const Complex& z,
                                  const NumericOptions& options) {
  require_height(z, options);
  const std::size_t K = product_truncation(z.imag());
  Complex q = e_of(z);
  Complex value = e_of(z * to_real(leading_exponent(spec)));
  for (const auto& [key, doubled] : spec.doubled_terms()) {
    // self-paired: one class, power 2r (possibly odd); otherwise both classes, power r
    if (key.self_paired()) {
      Complex single(1), qm(1);
      for (std::size_t m = 1; m <= K; ++m) {
        qm *= q;
        if (static_cast<std::int64_t>(m % static_cast<std::size_t>(key.delta)) == key.g)
          single *= Complex(1) - qm;
      }
      value *= ipow(single, doubled);
    } else {
      value *= ipow(class_product(key.delta, key.g, q, K), doubled / 2);
    }
  }
  return value;
}

Real verify_transformation(std::int64_t delta, std::int64_t g, const IntegerMatrix2x2& A,
                           const Complex& z, std::size_t K, const NumericOptions& options) {
  g = mod_floor(g, delta);
  Rational mu = mu_simplified(A, g, delta);
  Complex Az = A.act(z);
  Complex lhs = eta_eval_numeric(delta, g, Az, K, options);
  Complex rhs = e_of(Complex(to_real(mu))) * eta_eval_numeric(delta, mod_floor(A.a * g, delta), z, K, options);
  if (g == 0)
    rhs *= A.automorphy(z);
  return abs(lhs - rhs);
}

Complex progression_series_eval(const QExpansion& expansion, std::int64_t m, std::int64_t t,
                                const Complex& z) {
  std::vector<Real> sub;
  for (const auto& c : progression_coeffs(expansion, m, t))
    sub.push_back(to_real(c));
  Rational lead = (Rational(t) + expansion.prefix) / Rational(m);
  return e_of(z * to_real(lead)) * series_eval(sub, e_of(z));
}

Complex progression_average_eval(const QExpansion& expansion, std::int64_t m, std::int64_t t,
                                 const Complex& z) {
  if (m < 1 || t < 0 || t >= m)
    throw std::invalid_argument("need m >= 1 and 0 <= t < m");
  const auto coeffs = real_coeffs(expansion);
  const Real prefix = to_real(expansion.prefix);
  return average_with(m, t, expansion.prefix, z, [&](const Complex& w) {
    return e_of(w * prefix) * series_eval(coeffs, e_of(w));
  });
}

Complex progression_average_product_eval(const EtaQuotientSpec& spec, std::int64_t m,
                                         std::int64_t t, const Complex& z,
                                         const NumericOptions& options) {
  if (m < 1 || t < 0 || t >= m)
    throw std::invalid_argument("need m >= 1 and 0 <= t < m");
  NumericOptions inner = options;
  inner.floor = options.floor / static_cast<double>(m);
  return average_with(m, t, leading_exponent(spec), z, [&](const Complex& w) {
    return eta_quotient_eval_numeric(spec, w, inner);
  });
}

Real average_identity_check(const EtaQuotientSpec& spec, std::int64_t m, std::int64_t t,
                            const Complex& z, std::size_t K, const NumericOptions& options) {
  require_height(z, options);
  QExpansion e = expand(spec, K);
  return abs(progression_average_eval(e, m, t, z) - progression_series_eval(e, m, t, z));
}

Real gamma1_modulus_check(const EtaQuotientSpec& spec, std::int64_t m, std::int64_t t,
                          const IntegerMatrix2x2& A, const Complex& z,
                          const NumericOptions& options) {
  const std::int64_t level = 24 * spec.level() * m;
  if (!A.in_gamma1(level))
    throw std::domain_error("gamma1_modulus_check: matrix not in Gamma1(24Nm = " +
                            std::to_string(level) + ")");
  Complex Az = A.act(z);
  require_height(z, options);
  require_height(Az, options);
  Real lhs = abs(progression_average_product_eval(spec, m, t, Az, options));
  Real k = to_real(weight(spec));
  Real rhs = exp(k * log(abs(A.automorphy(z)))) *
             abs(progression_average_product_eval(spec, m, t, z, options));
  Real scale = lhs > rhs ? lhs : rhs;
  if (scale == 0)
    return Real(0);
  return abs(lhs - rhs) / scale;
}

std::vector<TransformCase> make_transform_corpus(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };
  auto pick = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  std::vector<TransformCase> out;
  while (out.size() < count) {
    TransformCase tc;
    tc.delta = pick(1, 6);
    tc.g = pick(0, tc.delta - 1);
    // a fifth of the cases are translations (c = 0), the rest have |c| = 12 delta
    if (pick(0, 4) == 0) {
      std::int64_t s = pick(0, 1) ? 1 : -1;
      tc.matrix = {s, pick(-20, 20), 0, s};
      tc.re = uniform(-0.5, 0.5);
      tc.im = uniform(0.5, 1.5);
    } else {
      std::int64_t c = 12 * tc.delta * (pick(0, 1) ? 1 : -1);
      std::int64_t a;
      do
        a = pick(-40, 40);
      while (a == 0 || gcd64(a, c) != 1);
      std::int64_t d = mod_inverse(a, c < 0 ? -c : c) + (c < 0 ? -c : c) * pick(-1, 1);
      std::int64_t b = (a * d - 1) / c;
      tc.matrix = IntegerMatrix2x2::make(a, b, c, d);
      // z = -d/c + rho y + i y gives Im(Az) = 1 / (c^2 y (1 + rho^2))
      double rho = uniform(-0.8, 0.8);
      double target = uniform(0.55, 1.5);
      double y = 1.0 / (static_cast<double>(c * c) * target * (1 + rho * rho));
      tc.re = -static_cast<double>(d) / static_cast<double>(c) + rho * y;
      tc.im = y;
    }
    Complex z(Real(tc.re), Real(tc.im));
    Real low = tc.matrix.act(z).imag();
    if (low < Real(0.5))
      continue;
    if (Real(tc.im) < low)
      low = Real(tc.im);
    tc.K = product_truncation(low);
    out.push_back(tc);
  }
  return out;
}

void run_transform_corpus(std::vector<TransformCase>& cases) {
  const auto n = static_cast<std::int64_t>(cases.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    auto& tc = cases[static_cast<std::size_t>(i)];
    Complex z(Real(tc.re), Real(tc.im));
    NumericOptions opts;
    opts.floor = std::min(tc.im, 0.5);
    Real r = verify_transformation(tc.delta, tc.g, tc.matrix, z, tc.K, opts);
    tc.residual = r.convert_to<double>();
    tc.pass = tc.matrix.act(z).imag() >= Real(0.5) && r < Real(tc.tol);
  }
}

} // namespace etaq
