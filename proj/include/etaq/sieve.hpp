#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "etaq/eta_model.hpp"
#include "etaq/qseries.hpp"

namespace etaq {

/// One instance of the incongruence criterion: a d coprime to 24Nm, its
/// inverse a, the minimal n with d^2 (n + P(r_a)) - P(r) = t (mod m), and
/// the coefficient c_{r_a}(n).
struct Witness {
  std::int64_t d = 1;
  std::int64_t a = 1;
  std::int64_t n = 0;
  BigInt coefficient;
  EtaQuotientSpec rotated;
};

enum class Verdict { AllPrimesExcluded, ExcludedExceptDivisors, NoWitness };

const char* verdict_name(Verdict v);

struct SieveReport {
  std::int64_t m = 1;
  std::int64_t t = 0;
  std::vector<Witness> witnesses;
  /// gcd of all witness coefficients (nonnegative); 0 when there is no witness.
  BigInt gcd;
  Verdict verdict = Verdict::NoWitness;
  /// Some witness has coefficient +-1.
  bool unit_witness = false;
  /// Units d for which t + P(r) - d^2 P(r_a) was not an integer.
  std::int64_t skipped = 0;
  std::int64_t units_examined = 0;
  /// The d range was cut short by SieveOptions::d_max.
  bool partial = false;

  /// p can be ruled out as the modulus of a linear congruence on (m, t).
  bool excludes(std::int64_t p) const;
};

struct SieveSummary {
  std::int64_t m = 1;
  std::vector<SieveReport> reports;
  /// t whose verdict is not ALL_PRIMES_EXCLUDED.
  std::vector<std::int64_t> survivors;
  /// t with no witness of coefficient +-1.
  std::vector<std::int64_t> unit_survivors;
};

struct SieveOptions {
  /// Enumerate d in [1, d_max) only; marks reports partial.
  std::optional<std::int64_t> d_max;
  bool dedupe = true;
  bool stop_on_unit = true;
};

/// Thread-safe store of expansions per rotated spec, grown on demand.
class CoefficientCache {
public:
  BigInt coefficient(const EtaQuotientSpec& spec, std::size_t n);

private:
  std::shared_mutex mutex_;
  std::map<EtaQuotientSpec, Series> series_;
};

struct MinSolution {
  std::int64_t n = 0;
  std::int64_t a = 1;
};

/// Smallest n >= 0 with d^2 (n + P(r_a)) - P(r) = t (mod m), where a d = 1
/// (mod 24Nm). Returns nullopt when no such n exists for this d.
/// Throws std::domain_error when gcd(d, 24Nm) != 1.
std::optional<MinSolution> solve_min_n(const EtaQuotientSpec& spec, std::int64_t m,
                                       std::int64_t t, std::int64_t d);

std::vector<Witness> collect_witnesses(const EtaQuotientSpec& spec, std::int64_t m,
                                       std::int64_t t, const SieveOptions& options = {},
                                       CoefficientCache* cache = nullptr);

SieveReport sieve(const EtaQuotientSpec& spec, std::int64_t m, std::int64_t t,
                  const SieveOptions& options = {}, CoefficientCache* cache = nullptr);

/// All residues t in [0, m), in parallel over t.
SieveSummary sieve_all_t(const EtaQuotientSpec& spec, std::int64_t m,
                         const SieveOptions& options = {});

namespace serial {
SieveSummary sieve_all_t(const EtaQuotientSpec& spec, std::int64_t m,
                         const SieveOptions& options = {});
} // namespace serial

} // namespace etaq
