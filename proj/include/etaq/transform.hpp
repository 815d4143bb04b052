#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "etaq/eta_model.hpp"
#include "etaq/exact.hpp"
#include "etaq/qseries.hpp"

namespace etaq {

// 50 significant decimal digits.
using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;

/// Element of SL2(Z).
struct IntegerMatrix2x2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  /// Throws std::invalid_argument unless ad - bc = 1.
  static IntegerMatrix2x2 make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  static IntegerMatrix2x2 identity() { return {}; }
  static IntegerMatrix2x2 translation(std::int64_t b) { return {1, b, 0, 1}; }

  bool in_gamma0(std::int64_t n) const { return c % n == 0; }
  bool in_gamma1(std::int64_t n) const {
    return in_gamma0(n) && mod_floor(a, n) == 1 % n && mod_floor(d, n) == 1 % n;
  }
  IntegerMatrix2x2 negated() const { return {-a, -b, -c, -d}; }
  IntegerMatrix2x2 operator*(const IntegerMatrix2x2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  friend bool operator==(const IntegerMatrix2x2&, const IntegerMatrix2x2&) = default;

  Complex act(const Complex& z) const;
  /// j(A, z) = cz + d.
  Complex automorphy(const Complex& z) const;
};

/// ((x)) = {x} - 1/2 for non-integral x, 0 for integers.
Rational sawtooth(const Rational& x);

/// Multiplier of eta_{delta,g} under A in Gamma0(12 delta), reduced to [0, 1).
Rational mu_simplified(const IntegerMatrix2x2& A, std::int64_t g, std::int64_t delta);

/// Unreduced multiplier from the Dedekind-type sum; requires A in Gamma0(delta)
/// and a >= 1 (apply A -> -A first otherwise; both act identically).
Rational mu_exact(const IntegerMatrix2x2& A, std::int64_t g, std::int64_t delta);

struct NumericOptions {
  /// Minimum imaginary part accepted for an evaluation point.
  double floor = 0.5;
};

Real to_real(const Rational& x);
Real to_real(const BigInt& x);
/// e(w) = exp(2 pi i w).
Complex e_of(const Complex& w);

/// Product truncation giving |q|^K < 1e-40 at imaginary part y.
std::size_t product_truncation(const Real& y);

/// eta_{delta,g}(z) by its truncated product; K = 0 picks product_truncation.
/// Throws std::domain_error("truncation unreliable") when Im z < floor or
/// |q|^K >= 1e-30.
Complex eta_eval_numeric(std::int64_t delta, std::int64_t g, const Complex& z,
                         std::size_t K = 0, const NumericOptions& options = {});

/// H_r(z) by its truncated product (no branch choices: all powers are integral).
Complex eta_quotient_eval_numeric(const EtaQuotientSpec& spec, const Complex& z,
                                  const NumericOptions& options = {});

/// |eta_{delta,g}(Az) - e(mu) j(A,z)^{[g = 0]} eta_{delta,ag}(z)|. K = 0 picks
/// the product truncation per point.
Real verify_transformation(std::int64_t delta, std::int64_t g, const IntegerMatrix2x2& A,
                           const Complex& z, std::size_t K = 0,
                           const NumericOptions& options = {});

/// H_{r,m,t}(z) from the exact coefficients: q^{(t+P)/m} sum c(mn+t) q^n.
Complex progression_series_eval(const QExpansion& expansion, std::int64_t m, std::int64_t t,
                                const Complex& z);

/// H_{r,m,t}(z) as the lambda-average of H_r((z + lambda)/m), H_r from the
/// exact (truncated) expansion.
Complex progression_average_eval(const QExpansion& expansion, std::int64_t m, std::int64_t t,
                                 const Complex& z);

/// Same average with H_r evaluated by its product; usable close to the real axis.
Complex progression_average_product_eval(const EtaQuotientSpec& spec, std::int64_t m,
                                         std::int64_t t, const Complex& z,
                                         const NumericOptions& options = {});

/// |average form - series form| with both sides truncated at K.
Real average_identity_check(const EtaQuotientSpec& spec, std::int64_t m, std::int64_t t,
                            const Complex& z, std::size_t K,
                            const NumericOptions& options = {});

/// Relative residual | |H(Az)| - |j(A,z)|^k |H(z)| | / max(|H(Az)|, |j|^k |H(z)|)
/// for H = H_{r,m,t}, A in Gamma1(24Nm), k = weight(spec).
Real gamma1_modulus_check(const EtaQuotientSpec& spec, std::int64_t m, std::int64_t t,
                          const IntegerMatrix2x2& A, const Complex& z,
                          const NumericOptions& options = {});

/// One entry of a transformation-law corpus.
struct TransformCase {
  std::int64_t delta = 1;
  std::int64_t g = 0;
  IntegerMatrix2x2 matrix;
  double re = 0.0;
  double im = 1.0;
  std::size_t K = 0;
  double tol = 1e-8;
  // filled by run_transform_corpus
  double residual = -1.0;
  bool pass = false;
};

/// Deterministic corpus: matrices in Gamma0(12 delta), delta <= 6, and points
/// z with Im(Az) >= 0.5.
std::vector<TransformCase> make_transform_corpus(std::uint64_t seed, std::size_t count);

/// Evaluates every case (in parallel) and fills residual/pass.
void run_transform_corpus(std::vector<TransformCase>& cases);

} // namespace etaq
