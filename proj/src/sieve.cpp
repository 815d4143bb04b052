#include "etaq/sieve.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

namespace etaq {

namespace {

void check_progression(std::int64_t m, std::int64_t t) {
  if (m < 1 || t < 0 || t >= m)
    throw std::invalid_argument("need m >= 1 and 0 <= t < m (got m=" + std::to_string(m) +
                                ", t=" + std::to_string(t) + ")");
}

// Per-d data that does not depend on t: x = t + base is integral iff base is.
struct UnitEntry {
  std::int64_t d = 1;
  std::int64_t a = 1;
  EtaQuotientSpec rotated;
  std::optional<BigInt> base; // P(r) - d^2 P(r_a) when integral
  std::int64_t inv_d2 = 0;    // (d^2)^{-1} mod m
};

std::vector<UnitEntry> unit_table(const EtaQuotientSpec& spec, std::int64_t m,
                                  const SieveOptions& options) {
  const std::int64_t modulus = 24 * spec.level() * m;
  const std::int64_t limit = options.d_max ? std::min(*options.d_max, modulus) : modulus;
  const Rational p_r = leading_exponent(spec);
  std::map<std::int64_t, std::pair<EtaQuotientSpec, Rational>> by_a_mod_n;
  std::vector<UnitEntry> table;
  for (std::int64_t d = 1; d < limit; ++d) {
    if (gcd64(d, modulus) != 1)
      continue;
    UnitEntry e;
    e.d = d;
    e.a = mod_inverse(d, modulus);
    auto it = by_a_mod_n.find(e.a % spec.level());
    if (it == by_a_mod_n.end()) {
      auto rot = rotate(spec, e.a);
      auto lead = leading_exponent(rot);
      it = by_a_mod_n.emplace(e.a % spec.level(), std::make_pair(rot, lead)).first;
    }
    e.rotated = it->second.first;
    Rational base = p_r - Rational(d * d) * it->second.second;
    if (base.is_integer())
      e.base = base.num();
    e.inv_d2 = mod_inverse(mod_floor(d * d, m), m);
    table.push_back(std::move(e));
  }
  return table;
}

std::int64_t min_n(const UnitEntry& e, std::int64_t m, std::int64_t t) {
  BigInt x = *e.base + t;
  auto x_mod = static_cast<std::int64_t>(mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(m)));
  return static_cast<std::int64_t>((static_cast<__int128>(x_mod) * e.inv_d2) % m);
}

BigInt abs_gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool is_unit(const BigInt& c) { return c == 1 || c == -1; }

SieveReport sieve_with_table(const std::vector<UnitEntry>& table, std::int64_t m,
                             std::int64_t t, const SieveOptions& options,
                             CoefficientCache& cache) {
  SieveReport rep;
  rep.m = m;
  rep.t = t;
  rep.partial = options.d_max.has_value();
  std::set<std::pair<EtaQuotientSpec, std::int64_t>> seen;
  for (const auto& e : table) {
    ++rep.units_examined;
    if (!e.base) {
      ++rep.skipped;
      continue;
    }
    std::int64_t n = min_n(e, m, t);
    if (options.dedupe && !seen.emplace(e.rotated, n).second)
      continue;
    Witness w{e.d, e.a, n, cache.coefficient(e.rotated, static_cast<std::size_t>(n)), e.rotated};
    rep.gcd = abs_gcd(rep.gcd, w.coefficient);
    bool unit = is_unit(w.coefficient);
    rep.unit_witness = rep.unit_witness || unit;
    rep.witnesses.push_back(std::move(w));
    if (unit && options.stop_on_unit)
      break;
  }
  if (rep.witnesses.empty())
    rep.verdict = Verdict::NoWitness;
  else if (rep.gcd == 1)
    rep.verdict = Verdict::AllPrimesExcluded;
  else
    rep.verdict = Verdict::ExcludedExceptDivisors;
  return rep;
}

void summarize(SieveSummary& s) {
  for (const auto& r : s.reports) {
    if (r.verdict != Verdict::AllPrimesExcluded)
      s.survivors.push_back(r.t);
    if (!r.unit_witness)
      s.unit_survivors.push_back(r.t);
  }
}

} // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
  case Verdict::AllPrimesExcluded:
    return "ALL_PRIMES_EXCLUDED";
  case Verdict::ExcludedExceptDivisors:
    return "EXCLUDED_EXCEPT_DIVISORS";
  case Verdict::NoWitness:
    return "NO_WITNESS";
  }
  return "?";
}

bool SieveReport::excludes(std::int64_t p) const {
  if (verdict == Verdict::NoWitness)
    return false;
  // p | 0 for every p
  return mpz_fdiv_ui(gcd.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

BigInt CoefficientCache::coefficient(const EtaQuotientSpec& spec, std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    auto it = series_.find(spec);
    if (it != series_.end() && n < it->second.size())
      return it->second[n];
  }
  std::unique_lock lock(mutex_);
  auto& s = series_[spec];
  if (n >= s.size())
    s = expand(spec, std::max(n, 2 * s.size())).coeffs;
  return s[n];
}

std::optional<MinSolution> solve_min_n(const EtaQuotientSpec& spec, std::int64_t m,
                                       std::int64_t t, std::int64_t d) {
  check_progression(m, t);
  const std::int64_t modulus = 24 * spec.level() * m;
  if (gcd64(d, modulus) != 1)
    throw std::domain_error("d = " + std::to_string(d) + " is not coprime to 24Nm = " +
                            std::to_string(modulus));
  MinSolution sol;
  sol.a = mod_inverse(d, modulus);
  Rational x = Rational(t) + leading_exponent(spec) -
               Rational(d) * Rational(d) * leading_exponent(rotate(spec, sol.a));
  if (!x.is_integer())
    return std::nullopt;
  std::int64_t inv = mod_inverse(mod_floor(d % m * (d % m), m), m);
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.num().get_mpz_t(), static_cast<unsigned long>(m));
  sol.n = static_cast<std::int64_t>((static_cast<__int128>(r.get_si()) * inv) % m);
  return sol;
}

std::vector<Witness> collect_witnesses(const EtaQuotientSpec& spec, std::int64_t m,
                                       std::int64_t t, const SieveOptions& options,
                                       CoefficientCache* cache) {
  return sieve(spec, m, t, options, cache).witnesses;
}

SieveReport sieve(const EtaQuotientSpec& spec, std::int64_t m, std::int64_t t,
                  const SieveOptions& options, CoefficientCache* cache) {
  check_progression(m, t);
  CoefficientCache local;
  return sieve_with_table(unit_table(spec, m, options), m, t, options, cache ? *cache : local);
}

SieveSummary sieve_all_t(const EtaQuotientSpec& spec, std::int64_t m,
                         const SieveOptions& options) {
  check_progression(m, 0);
  const auto table = unit_table(spec, m, options);
  CoefficientCache cache;
  SieveSummary out;
  out.m = m;
  out.reports.resize(static_cast<std::size_t>(m));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < m; ++t)
    out.reports[static_cast<std::size_t>(t)] = sieve_with_table(table, m, t, options, cache);
  summarize(out);
  return out;
}

namespace serial {

SieveSummary sieve_all_t(const EtaQuotientSpec& spec, std::int64_t m,
                         const SieveOptions& options) {
  SieveSummary out;
  out.m = m;
  CoefficientCache cache;
  for (std::int64_t t = 0; t < m; ++t)
    out.reports.push_back(etaq::sieve(spec, m, t, options, &cache));
  summarize(out);
  return out;
}

} // namespace serial

} // namespace etaq
