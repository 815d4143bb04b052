#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "etaq/eta_model.hpp"
#include "etaq/qseries.hpp"

namespace etaq {

/// Empirical check of c_r(mn + t) = 0 (mod p) for all mn + t <= K.
/// Nothing here is a proof: a clean result only means "empirical to K".
struct ScanResult {
  struct Counterexample {
    std::int64_t n = 0;       // progression index: coefficient c_r(mn + t)
    std::int64_t residue = 0; // c_r(mn + t) mod p, in [1, p)
  };

  std::int64_t m = 1;
  std::int64_t t = 0;
  std::int64_t p = 2;
  std::size_t truncation = 0;
  std::optional<Counterexample> counterexample;

  bool holds() const { return !counterexample; }
};

struct CongruenceScan {
  std::int64_t m = 1;
  std::int64_t p = 2;
  std::size_t truncation = 0;
  /// Residues t for which no counterexample was found up to the truncation.
  std::vector<std::int64_t> congruences;
};

/// Throws std::invalid_argument for composite p, bad (m, t), or K < t.
ScanResult verify_congruence(const QExpansion& expansion, std::int64_t m, std::int64_t t,
                             std::int64_t p);
ScanResult verify_congruence(const EtaQuotientSpec& spec, std::int64_t m, std::int64_t t,
                             std::int64_t p, std::size_t K);

/// Every t in [0, m) surviving verify_congruence; parallel over t.
CongruenceScan find_congruences(const QExpansion& expansion, std::int64_t m, std::int64_t p);
CongruenceScan find_congruences(const EtaQuotientSpec& spec, std::int64_t m, std::int64_t p,
                                std::size_t K);

namespace serial {
CongruenceScan find_congruences(const QExpansion& expansion, std::int64_t m, std::int64_t p);
} // namespace serial

} // namespace etaq
