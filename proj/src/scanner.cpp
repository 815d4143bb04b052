#include "etaq/scanner.hpp"

#include <stdexcept>
#include <string>

namespace etaq {

namespace {

void check_args(const QExpansion& e, std::int64_t m, std::int64_t t, std::int64_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (m < 1 || t < 0 || t >= m)
    throw std::invalid_argument("need m >= 1 and 0 <= t < m");
  if (static_cast<std::size_t>(t) > e.truncation())
    throw std::invalid_argument("truncation K must be at least t");
}

ScanResult scan_one(const QExpansion& e, std::int64_t m, std::int64_t t, std::int64_t p) {
  ScanResult r{m, t, p, e.truncation(), std::nullopt};
  const auto up = static_cast<unsigned long>(p);
  std::int64_t n = 0;
  for (auto i = static_cast<std::size_t>(t); i < e.coeffs.size();
       i += static_cast<std::size_t>(m), ++n) {
    unsigned long res = mpz_fdiv_ui(e.coeffs[i].get_mpz_t(), up);
    if (res != 0) {
      r.counterexample = ScanResult::Counterexample{n, static_cast<std::int64_t>(res)};
      break;
    }
  }
  return r;
}

} // namespace

ScanResult verify_congruence(const QExpansion& expansion, std::int64_t m, std::int64_t t,
                             std::int64_t p) {
  check_args(expansion, m, t, p);
  return scan_one(expansion, m, t, p);
}

ScanResult verify_congruence(const EtaQuotientSpec& spec, std::int64_t m, std::int64_t t,
                             std::int64_t p, std::size_t K) {
  if (static_cast<std::size_t>(std::max<std::int64_t>(t, 0)) > K)
    throw std::invalid_argument("truncation K must be at least t");
  return verify_congruence(expand(spec, K), m, t, p);
}

CongruenceScan find_congruences(const QExpansion& expansion, std::int64_t m, std::int64_t p) {
  check_args(expansion, m, 0, p);
  std::vector<char> holds(static_cast<std::size_t>(m), 0);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < m; ++t)
    holds[static_cast<std::size_t>(t)] =
        static_cast<std::size_t>(t) <= expansion.truncation() && scan_one(expansion, m, t, p).holds();
  CongruenceScan out{m, p, expansion.truncation(), {}};
  for (std::int64_t t = 0; t < m; ++t)
    if (holds[static_cast<std::size_t>(t)])
      out.congruences.push_back(t);
  return out;
}

CongruenceScan find_congruences(const EtaQuotientSpec& spec, std::int64_t m, std::int64_t p,
                                std::size_t K) {
  return find_congruences(expand(spec, K), m, p);
}

namespace serial {

CongruenceScan find_congruences(const QExpansion& expansion, std::int64_t m, std::int64_t p) {
  CongruenceScan out{m, p, expansion.truncation(), {}};
  for (std::int64_t t = 0; t < m && static_cast<std::size_t>(t) <= expansion.truncation(); ++t)
    if (verify_congruence(expansion, m, t, p).holds())
      out.congruences.push_back(t);
  return out;
}

} // namespace serial

} // namespace etaq
