#include "etaq/report_json.hpp"

#include <fstream>
#include <stdexcept>

namespace etaq {

namespace {

std::int64_t int_field(const json& j, const char* name) {
  if (!j.contains(name) || !j.at(name).is_number_integer())
    throw std::invalid_argument(std::string("missing or non-integer field '") + name + "'");
  return j.at(name).get<std::int64_t>();
}

std::vector<std::string> decimal_strings(const std::vector<BigInt>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v)
    out.push_back(x.get_str());
  return out;
}

} // namespace

EtaQuotientSpec spec_from_json(const json& j) {
  if (!j.is_object())
    throw std::invalid_argument("spec must be a JSON object");
  std::int64_t level = int_field(j, "N");
  if (!j.contains("terms") || !j.at("terms").is_array())
    throw std::invalid_argument("missing array field 'terms'");
  std::vector<TermInput> terms;
  for (const auto& t : j.at("terms")) {
    if (!t.is_object())
      throw std::invalid_argument("each term must be an object");
    TermInput in;
    in.delta = int_field(t, "delta");
    in.g = int_field(t, "g");
    in.num = int_field(t, "num");
    in.den = t.contains("den") ? int_field(t, "den") : 1;
    terms.push_back(in);
  }
  return EtaQuotientSpec::from_terms(level, terms);
}

EtaQuotientSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open spec file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return spec_from_json(j);
}

json spec_to_json(const EtaQuotientSpec& spec) {
  json terms = json::array();
  for (const auto& [key, doubled] : spec.doubled_terms()) {
    bool half = doubled % 2 != 0;
    terms.push_back({{"delta", key.delta},
                     {"g", key.g},
                     {"num", half ? doubled : doubled / 2},
                     {"den", half ? 2 : 1}});
  }
  return {{"N", spec.level()}, {"terms", terms}};
}

json expansion_to_json(const EtaQuotientSpec& spec, const QExpansion& e) {
  return {{"spec", spec_to_json(spec)},
          {"prefix", e.prefix.str()},
          {"weight", weight(spec).str()},
          {"K", e.truncation()},
          {"coeffs", decimal_strings(e.coeffs)}};
}

json report_to_json(const SieveReport& r) {
  json ws = json::array();
  for (const auto& w : r.witnesses)
    ws.push_back({{"d", w.d}, {"a", w.a}, {"n", w.n}, {"coefficient", w.coefficient.get_str()}});
  json j = {{"m", r.m},
            {"t", r.t},
            {"verdict", verdict_name(r.verdict)},
            {"gcd", r.gcd.get_str()},
            {"unit_witness", r.unit_witness},
            {"skipped_d", r.skipped},
            {"units_examined", r.units_examined},
            {"witnesses", ws}};
  if (r.partial)
    j["partial"] = true;
  return j;
}

json summary_to_json(const SieveSummary& s) {
  json reports = json::array();
  bool partial = false;
  for (const auto& r : s.reports) {
    reports.push_back(report_to_json(r));
    partial = partial || r.partial;
  }
  json j = {{"m", s.m},
            {"reports", reports},
            {"survivors", s.survivors},
            {"unit_survivors", s.unit_survivors}};
  if (partial)
    j["partial"] = true;
  return j;
}

json scan_result_to_json(const ScanResult& r) {
  json j = {{"m", r.m}, {"t", r.t}, {"p", r.p}, {"K", r.truncation}, {"flagged", "empirical"}};
  if (r.counterexample)
    j["counterexample"] = {{"n", r.counterexample->n}, {"residue", r.counterexample->residue}};
  else
    j["holds_up_to"] = r.truncation;
  return j;
}

json scan_to_json(const CongruenceScan& s) {
  return {{"m", s.m},
          {"p", s.p},
          {"K", s.truncation},
          {"congruences", s.congruences},
          {"flagged", "empirical"}};
}

std::vector<TransformCase> corpus_from_json(const json& j) {
  if (!j.is_array())
    throw std::invalid_argument("corpus must be a JSON array");
  std::vector<TransformCase> out;
  for (const auto& c : j) {
    TransformCase tc;
    tc.delta = int_field(c, "delta");
    tc.g = int_field(c, "g");
    const auto& m = c.at("matrix");
    if (!m.is_array() || m.size() != 4)
      throw std::invalid_argument("matrix must be [a, b, c, d]");
    tc.matrix = IntegerMatrix2x2::make(m[0].get<std::int64_t>(), m[1].get<std::int64_t>(),
                                       m[2].get<std::int64_t>(), m[3].get<std::int64_t>());
    const auto& z = c.at("z");
    if (!z.is_array() || z.size() != 2)
      throw std::invalid_argument("z must be [re, im]");
    tc.re = z[0].get<double>();
    tc.im = z[1].get<double>();
    tc.K = static_cast<std::size_t>(int_field(c, "K"));
    tc.tol = c.at("tol").get<double>();
    out.push_back(tc);
  }
  return out;
}

json corpus_to_json(const std::vector<TransformCase>& cases, bool with_results) {
  json out = json::array();
  for (const auto& tc : cases) {
    json c = {{"delta", tc.delta},
              {"g", tc.g},
              {"matrix", {tc.matrix.a, tc.matrix.b, tc.matrix.c, tc.matrix.d}},
              {"z", {tc.re, tc.im}},
              {"K", tc.K},
              {"tol", tc.tol}};
    if (with_results) {
      c["residual"] = tc.residual;
      c["pass"] = tc.pass;
    }
    out.push_back(c);
  }
  return out;
}

} // namespace etaq
