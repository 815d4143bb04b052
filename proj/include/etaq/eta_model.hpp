#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etaq/exact.hpp"

namespace etaq {

/// Index pair (delta, g) of a generalized eta-function, with g in its
/// canonical range [0, floor(delta/2)].
struct ClassKey {
  std::int64_t delta = 1;
  std::int64_t g = 0;

  /// Representative of the orbit {g, -g} mod delta.
  static ClassKey canonical(std::int64_t delta, std::int64_t g);

  /// g == -g (mod delta): the two product classes coincide.
  bool self_paired() const { return g == 0 || 2 * g == delta; }

  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

/// One user-supplied exponent r_{delta,g} = num/den before canonicalization.
struct TermInput {
  std::int64_t delta = 1;
  std::int64_t g = 0;
  std::int64_t num = 0;
  std::int64_t den = 1;
};

/// A validated generalized eta-quotient: the level N and the exponents
/// r_{delta,g}, stored doubled so that half-integers stay integral.
class EtaQuotientSpec {
public:
  using TermMap = std::map<ClassKey, std::int64_t>;

  std::int64_t level() const { return level_; }
  /// Canonical key -> 2 r_{delta,g}; never contains zero values.
  const TermMap& doubled_terms() const { return terms_; }
  Rational exponent(const ClassKey& key) const;

  friend bool operator==(const EtaQuotientSpec&, const EtaQuotientSpec&) = default;
  friend auto operator<=>(const EtaQuotientSpec& a, const EtaQuotientSpec& b) {
    if (auto c = a.level_ <=> b.level_; c != 0)
      return c;
    return a.terms_ <=> b.terms_;
  }

  /// Throws SpecError when the input is invalid.
  static EtaQuotientSpec from_terms(std::int64_t level, const std::vector<TermInput>& terms);

  /// Single-term convenience, e.g. single(5, 5, 1, -1) for eta_{5,1}^{-1}.
  static EtaQuotientSpec single(std::int64_t level, std::int64_t delta, std::int64_t g,
                                std::int64_t num, std::int64_t den = 1);

private:
  friend struct SpecBuilder;
  std::int64_t level_ = 1;
  TermMap terms_;
};

struct SpecError : std::invalid_argument {
  explicit SpecError(std::vector<std::string> v);
  std::vector<std::string> violations;
};

struct SpecValidation {
  std::optional<EtaQuotientSpec> spec;
  std::vector<std::string> violations;
  bool ok() const { return spec.has_value(); }
};

/// Canonicalizes and validates; collects every violation instead of
/// stopping at the first.
SpecValidation validate_spec(std::int64_t level, const std::vector<TermInput>& terms);

/// Second Bernoulli function {x}^2 - {x} + 1/6.
Rational bernoulli_p2(const Rational& x);

/// P(r) = 1/2 sum delta r_{delta,g} P2(g/delta).
Rational leading_exponent(const EtaQuotientSpec& spec);

/// r_a: every key (delta, g) moved to the class of (delta, a g). Requires gcd(a, N) = 1.
EtaQuotientSpec rotate(const EtaQuotientSpec& spec, std::int64_t a);

/// k = sum of r_{delta,0}.
Rational weight(const EtaQuotientSpec& spec);

std::string describe(const EtaQuotientSpec& spec);

} // namespace etaq
