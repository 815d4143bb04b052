#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "etaq/eta_model.hpp"
#include "etaq/exact.hpp"

namespace etaq {

using Series = std::vector<BigInt>;

/// q^prefix * sum_{n=0}^{K} coeffs[n] q^n.
struct QExpansion {
  Rational prefix;
  Series coeffs;

  std::size_t truncation() const { return coeffs.size() - 1; }
  const BigInt& operator[](std::size_t n) const { return coeffs.at(n); }
};

/// Cauchy product truncated at K. Inputs shorter than K + 1 are zero-padded.
Series series_mul(const Series& a, const Series& b, std::size_t K);

/// t with s * t = 1 + O(q^{K+1}). Requires s[0] = +-1.
Series series_inverse(const Series& s, std::size_t K);

/// Product part of eta_{delta,g}^r where doubled_exponent = 2r, truncated at K.
/// For self-paired classes (g = 0 or 2g = delta) this is
/// prod_{m = g mod delta} (1 - q^m)^{2r}; otherwise both classes +-g
/// contribute (1 - q^m)^r each.
Series eta_factor_series(ClassKey key, std::int64_t doubled_exponent, std::size_t K);

/// Multiplies s in place by (1 - q^step)^e. Residue chains mod step are
/// independent and processed in parallel for large step.
void apply_binomial_factor(Series& s, std::size_t step, std::int64_t e);

QExpansion expand(const EtaQuotientSpec& spec, std::size_t K);

/// [c(t), c(m + t), c(2m + t), ...] for all mn + t <= K.
std::vector<BigInt> progression_coeffs(const QExpansion& expansion, std::int64_t m,
                                       std::int64_t t);
std::vector<BigInt> progression_coeffs(const EtaQuotientSpec& spec, std::size_t K,
                                       std::int64_t m, std::int64_t t);

/// Single-threaded reference kernels, kept for tests and benchmarks.
namespace serial {
Series series_mul(const Series& a, const Series& b, std::size_t K);
QExpansion expand(const EtaQuotientSpec& spec, std::size_t K);
} // namespace serial

} // namespace etaq
