#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "etaq/eta_model.hpp"
#include "etaq/qseries.hpp"
#include "etaq/scanner.hpp"
#include "etaq/sieve.hpp"
#include "etaq/transform.hpp"

namespace etaq {

using json = nlohmann::json;

/// {"N": int, "terms": [{"delta", "g", "num", "den"}]}. Malformed structure
/// throws std::invalid_argument; constraint violations throw SpecError.
EtaQuotientSpec spec_from_json(const json& j);
EtaQuotientSpec load_spec(const std::string& path);
json spec_to_json(const EtaQuotientSpec& spec);

json expansion_to_json(const EtaQuotientSpec& spec, const QExpansion& e);
json report_to_json(const SieveReport& r);
json summary_to_json(const SieveSummary& s);
json scan_result_to_json(const ScanResult& r);
json scan_to_json(const CongruenceScan& s);

std::vector<TransformCase> corpus_from_json(const json& j);
json corpus_to_json(const std::vector<TransformCase>& cases, bool with_results);

} // namespace etaq
