// Command-line front end for generalized eta-quotient expansion,
// incongruence sieving, congruence scanning and transformation checks.
//
// Exit codes: 0 success, 1 numeric check failed, 2 usage or validation error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "etaq/report_json.hpp"

using namespace etaq;

namespace {

constexpr int kOk = 0;
constexpr int kNumericFailure = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::string spec_path;
  std::int64_t m = 0;
  std::optional<std::int64_t> t;
  std::int64_t p = 0;
  std::int64_t K = -1;
  std::optional<std::int64_t> d_max;
  bool json = false;
  std::uint64_t seed = 1;
  double tol = 1e-8;

  // verify-mu / avg-check / corpus
  std::int64_t delta = 1;
  std::int64_t g = 0;
  std::vector<std::int64_t> matrix;
  std::vector<std::string> z;
  std::string input;
  std::string output;
  std::size_t count = 50;
  bool generate = false;
};

std::string join_ints(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? ", " : "") << v[i];
  os << "]";
  return os.str();
}

std::string show(const Rational& x) { return x.is_integer() ? x.num().get_str() : x.str(); }

Complex parse_point(const std::vector<std::string>& z) {
  if (z.size() != 2)
    throw std::invalid_argument("--z expects two values: re im");
  return {Real(z[0]), Real(z[1])};
}

int cmd_expand(const RunConfig& cfg) {
  if (cfg.K < 0)
    throw std::invalid_argument("--terms is required");
  auto spec = load_spec(cfg.spec_path);
  auto e = expand(spec, static_cast<std::size_t>(cfg.K));
  if (cfg.json) {
    std::cout << expansion_to_json(spec, e).dump(2) << "\n";
    return kOk;
  }
  std::cout << describe(spec) << "\n"
            << "P(r) = " << e.prefix << "\n"
            << "weight k = " << show(weight(spec)) << "\n";
  for (std::size_t n = 0; n < e.coeffs.size(); ++n)
    std::cout << "c(" << n << ") = " << e.coeffs[n] << "\n";
  return kOk;
}

int cmd_sieve(const RunConfig& cfg) {
  if (cfg.m < 1)
    throw std::invalid_argument("--m must be a positive integer");
  auto spec = load_spec(cfg.spec_path);
  SieveOptions opts;
  opts.d_max = cfg.d_max;
  SieveSummary summary;
  if (cfg.t) {
    summary.m = cfg.m;
    summary.reports.push_back(sieve(spec, cfg.m, *cfg.t, opts));
    const auto& r = summary.reports.back();
    if (r.verdict != Verdict::AllPrimesExcluded)
      summary.survivors.push_back(r.t);
    if (!r.unit_witness)
      summary.unit_survivors.push_back(r.t);
  } else {
    summary = sieve_all_t(spec, cfg.m, opts);
  }
  if (cfg.json) {
    std::cout << summary_to_json(summary).dump(2) << "\n";
    return kOk;
  }
  std::cout << describe(spec) << ", m = " << cfg.m << (cfg.d_max ? " (partial d range)" : "")
            << "\n";
  for (const auto& r : summary.reports) {
    std::cout << "t = " << r.t << ": " << verdict_name(r.verdict);
    if (r.verdict == Verdict::ExcludedExceptDivisors)
      std::cout << " (every prime not dividing " << r.gcd << ")";
    std::cout << ", " << r.witnesses.size() << " witness(es)";
    if (!r.witnesses.empty()) {
      const auto& w = r.witnesses.front();
      std::cout << ", first d=" << w.d << " a=" << w.a << " n=" << w.n << " c=" << w.coefficient;
    }
    std::cout << "\n";
  }
  std::cout << "survivors: " << join_ints(summary.survivors) << "\n"
            << "no unit witness: " << join_ints(summary.unit_survivors) << "\n";
  return kOk;
}

int cmd_scan(const RunConfig& cfg) {
  if (cfg.m < 1 || cfg.K < 0)
    throw std::invalid_argument("--m and --terms are required");
  if (!is_prime(cfg.p))
    throw std::invalid_argument("--p must be prime (got " + std::to_string(cfg.p) + ")");
  auto spec = load_spec(cfg.spec_path);
  auto e = expand(spec, static_cast<std::size_t>(cfg.K));
  if (cfg.t) {
    auto r = verify_congruence(e, cfg.m, *cfg.t, cfg.p);
    if (cfg.json) {
      std::cout << scan_result_to_json(r).dump(2) << "\n";
    } else if (r.holds()) {
      std::cout << "c(" << cfg.m << "n+" << *cfg.t << ") = 0 mod " << cfg.p
                << " for all terms up to q^" << cfg.K << " (empirical)\n";
    } else {
      std::cout << "counterexample: n = " << r.counterexample->n << ", c(" << cfg.m << "n+" << *cfg.t
                << ") = " << r.counterexample->residue << " mod " << cfg.p << "\n";
    }
    return kOk;
  }
  auto scan = find_congruences(e, cfg.m, cfg.p);
  if (cfg.json)
    std::cout << scan_to_json(scan).dump(2) << "\n";
  else
    std::cout << "candidate congruences mod " << cfg.p << " for m = " << cfg.m << ": "
              << join_ints(scan.congruences) << " (empirical to K = " << cfg.K << ")\n";
  return kOk;
}

int cmd_verify_mu(const RunConfig& cfg) {
  if (cfg.matrix.size() != 4)
    throw std::invalid_argument("--matrix expects four integers a b c d");
  auto A = IntegerMatrix2x2::make(cfg.matrix[0], cfg.matrix[1], cfg.matrix[2], cfg.matrix[3]);
  if (A.a < 1)
    throw std::invalid_argument("--matrix needs a >= 1 (replace A by -A)");
  std::int64_t g = mod_floor(cfg.g, cfg.delta);
  Rational simplified = mu_simplified(A, g, cfg.delta);
  Rational exact = mu_exact(A, g, cfg.delta);
  bool agree = rational_mod1(exact) == simplified;
  json out = {{"delta", cfg.delta},
              {"g", g},
              {"matrix", cfg.matrix},
              {"mu_simplified", simplified.str()},
              {"mu_exact", exact.str()},
              {"agree", agree}};
  bool ok = agree;
  if (!cfg.z.empty()) {
    NumericOptions opts;
    Complex z = parse_point(cfg.z);
    opts.floor = 0.999 * std::min({0.5, z.imag().convert_to<double>(), A.act(z).imag().convert_to<double>()});
    Real r = verify_transformation(cfg.delta, g, A, z, 0, opts);
    out["residual"] = r.convert_to<double>();
    out["pass"] = r < Real(cfg.tol);
    ok = ok && r < Real(cfg.tol);
  }
  if (cfg.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "mu (simplified, mod 1) = " << simplified << "\n"
              << "mu (exact sum)         = " << exact << (agree ? "  [agrees]" : "  [MISMATCH]") << "\n";
    if (out.contains("residual"))
      std::cout << "transformation residual = " << out["residual"].get<double>() << "\n";
  }
  return ok ? kOk : kNumericFailure;
}

int cmd_avg_check(const RunConfig& cfg) {
  if (cfg.m < 1 || !cfg.t || cfg.K < 0)
    throw std::invalid_argument("--m, --t and --terms are required");
  auto spec = load_spec(cfg.spec_path);
  Complex z = cfg.z.empty() ? Complex(0, 2) : parse_point(cfg.z);
  Real r = average_identity_check(spec, cfg.m, *cfg.t, z, static_cast<std::size_t>(cfg.K));
  bool pass = r < Real(cfg.tol);
  if (cfg.json)
    std::cout << json{{"m", cfg.m}, {"t", *cfg.t}, {"K", cfg.K}, {"residual", r.convert_to<double>()},
                      {"pass", pass}}
                     .dump(2)
              << "\n";
  else
    std::cout << "average identity residual = " << r.str(6) << (pass ? " (pass)" : " (FAIL)") << "\n";
  return pass ? kOk : kNumericFailure;
}

int cmd_corpus(const RunConfig& cfg) {
  std::vector<TransformCase> cases;
  if (cfg.generate) {
    cases = make_transform_corpus(cfg.seed, cfg.count);
    for (auto& tc : cases)
      tc.tol = cfg.tol;
  } else {
    std::ifstream in(cfg.input);
    if (!in)
      throw std::invalid_argument("cannot open corpus '" + cfg.input + "'");
    json j;
    try {
      in >> j;
    } catch (const json::parse_error& e) {
      throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    cases = corpus_from_json(j);
  }
  // a generated corpus is written out unevaluated; an input corpus is run
  const bool run = !cfg.generate;
  if (run)
    run_transform_corpus(cases);
  json out = corpus_to_json(cases, run);
  if (cfg.output.empty()) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::ofstream(cfg.output) << out.dump(2) << "\n";
  }
  if (!run)
    return kOk;
  std::size_t failed = 0;
  for (const auto& tc : cases)
    failed += tc.pass ? 0 : 1;
  std::cerr << cases.size() - failed << "/" << cases.size() << " cases pass\n";
  return failed == 0 ? kOk : kNumericFailure;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized eta-quotients: expansion, incongruence sieve, congruence scan"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--spec", cfg.spec_path, "eta-quotient JSON file")->required();
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", cfg.json, "emit JSON"); };

  auto* expand_cmd = app.add_subcommand("expand", "q-expansion coefficients c_r(0..K)");
  add_spec(expand_cmd);
  expand_cmd->add_option("--terms", cfg.K, "truncation K")->required();
  add_json(expand_cmd);

  auto* sieve_cmd = app.add_subcommand("sieve", "incongruence certificates for t mod m");
  add_spec(sieve_cmd);
  sieve_cmd->add_option("--m", cfg.m, "modulus m")->required();
  sieve_cmd->add_option("--t", cfg.t, "single residue (default: all)");
  sieve_cmd->add_option("--d-max", cfg.d_max, "only d < d_max (report marked partial)");
  add_json(sieve_cmd);

  auto* scan_cmd = app.add_subcommand("scan", "empirical congruence scan mod p");
  add_spec(scan_cmd);
  scan_cmd->add_option("--m", cfg.m, "modulus m")->required();
  scan_cmd->add_option("--p", cfg.p, "prime p")->required();
  scan_cmd->add_option("--terms", cfg.K, "truncation K")->required();
  scan_cmd->add_option("--t", cfg.t, "single residue (default: all)");
  add_json(scan_cmd);

  auto* mu_cmd = app.add_subcommand("verify-mu", "multiplier of eta_{delta,g} under A");
  mu_cmd->add_option("--delta", cfg.delta)->required()->check(CLI::PositiveNumber);
  mu_cmd->add_option("--g", cfg.g)->required();
  mu_cmd->add_option("--matrix", cfg.matrix, "a b c d")->required()->expected(4);
  mu_cmd->add_option("--z", cfg.z, "re im: also check the transformation law numerically")->expected(2);
  mu_cmd->add_option("--tol", cfg.tol);
  add_json(mu_cmd);

  auto* avg_cmd = app.add_subcommand("avg-check", "numeric check of the progression average identity");
  add_spec(avg_cmd);
  avg_cmd->add_option("--m", cfg.m)->required();
  avg_cmd->add_option("--t", cfg.t)->required();
  avg_cmd->add_option("--terms", cfg.K)->required();
  avg_cmd->add_option("--z", cfg.z, "re im (default 0 2)")->expected(2);
  avg_cmd->add_option("--tol", cfg.tol);
  add_json(avg_cmd);

  auto* corpus_cmd = app.add_subcommand("corpus", "generate or run a transformation-law corpus");
  auto* input_opt = corpus_cmd->add_option("--input", cfg.input, "corpus JSON to run");
  auto* gen_flag = corpus_cmd->add_flag("--generate", cfg.generate, "generate a corpus instead");
  input_opt->excludes(gen_flag);
  corpus_cmd->add_option("--seed", cfg.seed);
  corpus_cmd->add_option("--count", cfg.count);
  corpus_cmd->add_option("--tol", cfg.tol);
  corpus_cmd->add_option("--output", cfg.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*expand_cmd)
      return cmd_expand(cfg);
    if (*sieve_cmd)
      return cmd_sieve(cfg);
    if (*scan_cmd)
      return cmd_scan(cfg);
    if (*mu_cmd)
      return cmd_verify_mu(cfg);
    if (*avg_cmd)
      return cmd_avg_check(cfg);
    if (*corpus_cmd) {
      if (!cfg.generate && cfg.input.empty())
        throw std::invalid_argument("corpus: give --input FILE or --generate");
      return cmd_corpus(cfg);
    }
  } catch (const SpecError& e) {
    std::cerr << "invalid spec:\n";
    for (const auto& v : e.violations)
      std::cerr << "  " << v << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumericFailure;
  }
  return kUsage;
}
