#include "etaq/eta_model.hpp"

#include <sstream>
#include <stdexcept>

namespace etaq {

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) {
    if (!out.empty())
      out += "; ";
    out += s;
  }
  return out;
}

} // namespace

ClassKey ClassKey::canonical(std::int64_t delta, std::int64_t g) {
  if (delta <= 0)
    throw std::invalid_argument("delta must be positive");
  std::int64_t r = mod_floor(g, delta);
  return {delta, std::min(r, delta - r)};
}

Rational EtaQuotientSpec::exponent(const ClassKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : Rational(it->second, 2);
}

SpecError::SpecError(std::vector<std::string> v)
    : std::invalid_argument(join(v)), violations(std::move(v)) {}

struct SpecBuilder {
  static EtaQuotientSpec make(std::int64_t level, EtaQuotientSpec::TermMap terms) {
    EtaQuotientSpec s;
    s.level_ = level;
    s.terms_ = std::move(terms);
    return s;
  }
};

SpecValidation validate_spec(std::int64_t level, const std::vector<TermInput>& terms) {
  SpecValidation out;
  auto& errs = out.violations;
  if (level <= 0) {
    errs.push_back("level N must be positive (got " + std::to_string(level) + ")");
    return out;
  }
  EtaQuotientSpec::TermMap merged;
  for (const auto& t : terms) {
    std::string where = "term (" + std::to_string(t.delta) + "," + std::to_string(t.g) + ")";
    if (t.delta <= 0) {
      errs.push_back(where + ": delta must be positive");
      continue;
    }
    if (level % t.delta != 0)
      errs.push_back(where + ": delta does not divide N=" + std::to_string(level));
    if (t.den != 1 && t.den != 2) {
      errs.push_back(where + ": exponent denominator must be 1 or 2");
      continue;
    }
    ClassKey key = ClassKey::canonical(t.delta, t.g);
    std::int64_t doubled = t.den == 1 ? 2 * t.num : t.num;
    if (doubled % 2 != 0 && !key.self_paired())
      errs.push_back(where + ": half-integer exponent allowed only for g = 0 or g = delta/2");
    merged[key] += doubled;
  }
  if (!errs.empty())
    return out;
  std::erase_if(merged, [](const auto& kv) { return kv.second == 0; });
  out.spec = SpecBuilder::make(level, std::move(merged));
  return out;
}

EtaQuotientSpec EtaQuotientSpec::from_terms(std::int64_t level,
                                            const std::vector<TermInput>& terms) {
  auto v = validate_spec(level, terms);
  if (!v.ok())
    throw SpecError(std::move(v.violations));
  return std::move(*v.spec);
}

EtaQuotientSpec EtaQuotientSpec::single(std::int64_t level, std::int64_t delta, std::int64_t g,
                                        std::int64_t num, std::int64_t den) {
  return from_terms(level, {{delta, g, num, den}});
}

Rational bernoulli_p2(const Rational& x) {
  Rational f = rational_mod1(x);
  return f * f - f + Rational(1, 6);
}

Rational leading_exponent(const EtaQuotientSpec& spec) {
  Rational sum;
  for (const auto& [key, doubled] : spec.doubled_terms())
    sum += Rational(key.delta * doubled, 2) * bernoulli_p2(Rational(key.g, key.delta));
  return sum / Rational(2);
}

EtaQuotientSpec rotate(const EtaQuotientSpec& spec, std::int64_t a) {
  if (gcd64(a, spec.level()) != 1)
    throw std::domain_error("rotate: a = " + std::to_string(a) + " is not a unit mod N = " +
                            std::to_string(spec.level()));
  EtaQuotientSpec::TermMap out;
  for (const auto& [key, doubled] : spec.doubled_terms()) {
    std::int64_t ag = mod_floor(mod_floor(a, key.delta) * key.g, key.delta);
    out[ClassKey::canonical(key.delta, ag)] += doubled;
  }
  return SpecBuilder::make(spec.level(), std::move(out));
}

Rational weight(const EtaQuotientSpec& spec) {
  std::int64_t doubled = 0;
  for (const auto& [key, d] : spec.doubled_terms())
    if (key.g == 0)
      doubled += d;
  return Rational(doubled, 2);
}

std::string describe(const EtaQuotientSpec& spec) {
  std::ostringstream os;
  os << "N=" << spec.level();
  for (const auto& [key, d] : spec.doubled_terms())
    os << " eta_{" << key.delta << "," << key.g << "}^(" << Rational(d, 2) << ")";
  return os.str();
}

} // namespace etaq
