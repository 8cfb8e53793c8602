#include "fpalg/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fpalg/ideals.hpp"
#include "fpalg/json_io.hpp"
#include "fpalg/membership.hpp"
#include "fpalg/seminorms.hpp"
#include "fpalg/verify.hpp"

namespace fpalg {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string out_path;
  std::optional<double> tol;
  std::uint64_t seed = 0;

  std::string series;
  std::string other;
  std::optional<double> p;
  std::optional<double> c;
  std::string family = "coeff";
  std::string metric_kind = "privalov";
  std::string rule;
  std::vector<double> params;
  double log_scale = 0.0;
  std::size_t n_max = std::size_t{1} << 14;
  double threshold = 0.01;
  std::string lambda = "0.5,0";
  double r = 0.8;
  std::size_t k_budget = 64;
  std::string theorem;
  std::size_t corpus_size = 1000;
  std::size_t min_degree = 4;
  std::size_t max_degree = 256;
  std::string sequence = "linear";
  std::size_t k_max = 32;
  std::string csv_path;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TruncatedSeries load_series(const std::string& arg, const char* flag) {
  if (arg.empty()) throw UsageError(std::string("missing ") + flag);
  const auto first = arg.find_first_not_of(" \t\r\n");
  const bool inline_json = first != std::string::npos && (arg[first] == '{' || arg[first] == '[');
  try {
    if (inline_json && arg[first] == '[') return parse_series("{\"coeffs\": " + arg + "}");
    return parse_series(inline_json ? arg : read_file(arg));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

SpaceParams space(const RunConfig& cfg) {
  if (!cfg.p) throw UsageError("--p is required");
  if (!(*cfg.p > 1.0) || !std::isfinite(*cfg.p)) throw UsageError("--p must be > 1");
  return SpaceParams(*cfg.p);
}

double positive_c(const RunConfig& cfg) {
  if (!cfg.c) throw UsageError("--c is required");
  if (!(*cfg.c > 0.0) || !std::isfinite(*cfg.c)) throw UsageError("--c must be > 0");
  return *cfg.c;
}

DiskPoint parse_lambda(const std::string& text) {
  std::stringstream ss(text);
  std::string re_s, im_s;
  std::getline(ss, re_s, ',');
  std::getline(ss, im_s);
  try {
    std::size_t pos = 0;
    const double re = std::stod(re_s, &pos);
    const double im = im_s.empty() ? 0.0 : std::stod(im_s);
    const Complex z{re, im};
    if (!(std::abs(z) < 1.0)) throw UsageError("--lambda must satisfy |lambda| < 1");
    return DiskPoint(z);
  } catch (const std::logic_error&) {
    throw UsageError("--lambda must be re,im");
  }
}

double radius(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw UsageError("--r must lie in [0, 1)");
  return r;
}

double param(const RunConfig& cfg, std::size_t i, std::optional<double> fallback = std::nullopt) {
  if (i < cfg.params.size()) return cfg.params[i];
  if (fallback) return *fallback;
  throw UsageError("rule '" + cfg.rule + "' needs more --params");
}

CoefficientRule make_rule(const RunConfig& cfg, const SpaceParams& sp) {
  const double alpha = sp.alpha();
  try {
    CoefficientRule rule = [&]() -> CoefficientRule {
      if (cfg.rule == "geometric") return CoefficientRule::geometric(param(cfg, 0));
      if (cfg.rule == "stretched-exp") {
        return CoefficientRule::stretched_exp(param(cfg, 0), param(cfg, 1, alpha));
      }
      if (cfg.rule == "stretched-exp-damped") {
        return CoefficientRule::stretched_exp_damped(param(cfg, 0, alpha));
      }
      if (cfg.rule == "power-table") {
        const auto table = load_series(cfg.series, "--series (power table)");
        return CoefficientRule::power_table({table.coeffs().begin(), table.coeffs().end()});
      }
      if (cfg.rule == "lacunary") {
        // a_n = exp(eps n^beta) at n = 2^k, zero elsewhere.
        const double eps = param(cfg, 0);
        const double beta = param(cfg, 1, alpha);
        if (!(beta > 0.0 && beta < 1.0)) throw UsageError("beta must lie in (0, 1)");
        return CoefficientRule::custom("lacunary", [eps, beta](std::size_t n) {
          if (n == 0 || (n & (n - 1)) != 0) return -std::numeric_limits<double>::infinity();
          return eps * std::pow(static_cast<double>(n), beta);
        });
      }
      if (cfg.rule == "poly-growth") {
        // a_n = (n + 1)^s
        const double s = param(cfg, 0);
        return CoefficientRule::custom("poly-growth", [s](std::size_t n) {
          return s * std::log(static_cast<double>(n) + 1.0);
        });
      }
      throw UsageError("unknown --rule '" + cfg.rule + "'");
    }();
    return cfg.log_scale != 0.0 ? rule.scaled(cfg.log_scale) : rule;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Json quadrature_json(const Quadrature& q) {
  return Json{{"value", q.value}, {"residual", q.residual}, {"nodes", q.nodes}};
}

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", {{"kind", kind}, {"message", message}}}};
}

void require_finite(const Json& j) {
  if (j.is_number_float() && !std::isfinite(j.get<double>())) {
    throw std::domain_error("non-finite number in output");
  }
  if (j.is_structured()) {
    for (const auto& v : j) require_finite(v);
  }
}

Json run_seminorm(const RunConfig& cfg) {
  const auto f = load_series(cfg.series, "--series");
  const auto sp = space(cfg);
  const double c = positive_c(cfg);
  IntegralOptions opts;
  if (cfg.tol) opts.tol = *cfg.tol;
  if (cfg.family == "coeff") return quadrature_json(seminorm(f, sp, {SeminormFamily::Coefficient, c}, opts));
  if (cfg.family == "integral") return quadrature_json(seminorm(f, sp, {SeminormFamily::Integral, c}, opts));
  throw UsageError("--family must be coeff or integral");
}

Json run_metric(const RunConfig& cfg) {
  const auto f = load_series(cfg.series, "--series");
  const auto g = load_series(cfg.other, "--other");
  const auto sp = space(cfg);
  if (cfg.metric_kind == "privalov") {
    MetricOptions opts;
    if (cfg.tol) opts.tol = *cfg.tol;
    return quadrature_json(privalov_metric(f, g, sp, opts));
  }
  if (cfg.metric_kind == "envelope") {
    const auto m = envelope_metric(f, g, sp, cfg.tol.value_or(0x1p-40));
    return Json{{"value", m.value}, {"tail_bound", m.tail_bound}, {"terms", m.terms}};
  }
  throw UsageError("--kind must be privalov or envelope");
}

Json run_classify(const RunConfig& cfg) {
  const auto sp = space(cfg);
  if (cfg.rule.empty()) throw UsageError("--rule is required");
  if (cfg.n_max < 256) throw UsageError("--nmax must be >= 256");
  if (!(cfg.threshold > 0.0)) throw UsageError("--threshold must be > 0");
  const auto rule = make_rule(cfg, sp);
  const ClassifyOptions opts{cfg.threshold, cfg.n_max};
  return verdict_to_json(classify(rule, sp, opts), rule, sp, opts);
}

Json run_ideal_check(const RunConfig& cfg) {
  const auto f = load_series(cfg.series, "--series");
  const IdealHandle ideal(parse_lambda(cfg.lambda));
  const double tol = cfg.tol.value_or(1e-12);
  if (!(tol >= 0.0)) throw UsageError("--tol must be >= 0");
  const auto m = ideal_contains(ideal, f, tol);
  return Json{{"contains", m.contains}, {"value", complex_to_json(m.value)}};
}

Json run_factor(const RunConfig& cfg) {
  const auto f = load_series(cfg.series, "--series");
  return series_to_json(synthetic_divide(f, parse_lambda(cfg.lambda)));
}

Json run_quotient_norm(const RunConfig& cfg) {
  const auto f = load_series(cfg.series, "--series");
  const IdealHandle ideal(parse_lambda(cfg.lambda));
  const auto b = quotient_seminorm_bounds(f, ideal, radius(cfg.r), cfg.k_budget);
  return Json{{"lower", b.lower},
              {"upper", b.upper},
              {"witness_k", b.witness_k},
              {"value_at_lambda", complex_to_json(eval(f, ideal.lambda().value()))}};
}

CorpusSpec corpus_spec(const RunConfig& cfg) {
  if (cfg.corpus_size == 0) throw UsageError("--corpus-size must be > 0");
  if (cfg.min_degree > cfg.max_degree) throw UsageError("--min-degree must not exceed --max-degree");
  CorpusSpec spec;
  spec.seed = cfg.seed;
  spec.size = cfg.corpus_size;
  spec.min_degree = cfg.min_degree;
  spec.max_degree = cfg.max_degree;
  return spec;
}

Json run_verify(const RunConfig& cfg) {
  Theorem3Options t3;
  if (cfg.tol) t3.quadrature.tol = *cfg.tol;
  VerificationReport report;
  if (cfg.theorem == "t3-first") {
    report = check_theorem3_first(generate_corpus(corpus_spec(cfg)), space(cfg), positive_c(cfg), t3);
  } else if (cfg.theorem == "t3-constant") {
    report = estimate_theorem3_constant(corpus_spec(cfg), space(cfg), positive_c(cfg), t3);
  } else if (cfg.theorem == "functional") {
    FunctionalOptions opts;
    if (cfg.p) opts.p = space(cfg).p();
    if (cfg.c) opts.c = positive_c(cfg);
    report = check_functional_axioms(generate_corpus(corpus_spec(cfg)), parse_lambda(cfg.lambda), opts);
  } else if (cfg.theorem == "hurwitz") {
    HurwitzSpec spec;
    spec.seed = cfg.seed;
    spec.k_max = cfg.k_max;
    if (cfg.sequence == "linear") {
      spec.kind = HurwitzSpec::Kind::Linear;
    } else if (cfg.sequence == "constant") {
      spec.kind = HurwitzSpec::Kind::Constant;
    } else if (cfg.sequence == "random") {
      spec.kind = HurwitzSpec::Kind::RandomPerturbation;
    } else {
      throw UsageError("--sequence must be linear, constant or random");
    }
    const DiskPoint lambda = parse_lambda(cfg.lambda);
    const double r = radius(cfg.r);
    if (!(r > lambda.modulus())) throw UsageError("--r must exceed |lambda|");
    try {
      report = hurwitz_closure_suite(lambda, r, spec);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("invalid input: ") + e.what());
    }
  } else {
    throw UsageError("--theorem must be t3-first, t3-constant, functional or hurwitz");
  }
  if (!cfg.csv_path.empty()) {
    std::ofstream csv(cfg.csv_path);
    if (!csv) throw UsageError("cannot write " + cfg.csv_path);
    write_report_csv(report, csv);
  }
  return report_to_json(report);
}

Json run_gen_corpus(const RunConfig& cfg) { return corpus_to_json(generate_corpus(corpus_spec(cfg))); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
  RunConfig cfg;
  CLI::App app{"Seminorms, membership and maximal ideals of the algebras F^p", "fpalg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", cfg.out_path, "Write the JSON result here instead of stdout");
  app.add_option("--tol", cfg.tol, "Quadrature / membership / truncation tolerance");
  app.add_option("--seed", cfg.seed, "Corpus seed");

  auto* seminorm_cmd = app.add_subcommand("seminorm", "Evaluate ||f||_{p,c} or |||f|||_{p,c}");
  seminorm_cmd->add_option("--series", cfg.series, "Series JSON file or inline JSON")->required();
  seminorm_cmd->add_option("--p", cfg.p)->required();
  seminorm_cmd->add_option("--c", cfg.c)->required();
  seminorm_cmd->add_option("--family", cfg.family)->check(CLI::IsMember({"coeff", "integral"}));

  auto* metric_cmd = app.add_subcommand("metric", "Privalov metric d_p or envelope metric lambda_p");
  metric_cmd->add_option("--series", cfg.series)->required();
  metric_cmd->add_option("--other", cfg.other)->required();
  metric_cmd->add_option("--p", cfg.p)->required();
  metric_cmd->add_option("--kind", cfg.metric_kind)->check(CLI::IsMember({"privalov", "envelope"}));

  auto* classify_cmd = app.add_subcommand("classify", "Coefficient-growth membership verdict");
  classify_cmd->add_option("--rule", cfg.rule,
                           "geometric | stretched-exp | stretched-exp-damped | power-table | lacunary | poly-growth")
      ->required();
  classify_cmd->add_option("--params", cfg.params, "Rule parameters")->delimiter(',');
  classify_cmd->add_option("--series", cfg.series, "Coefficient table for power-table");
  classify_cmd->add_option("--log-scale", cfg.log_scale, "Multiply the rule by exp(value)");
  classify_cmd->add_option("--p", cfg.p)->required();
  classify_cmd->add_option("--nmax", cfg.n_max);
  classify_cmd->add_option("--threshold", cfg.threshold);

  auto* ideal_cmd = app.add_subcommand("ideal-check", "Membership of f in M_lambda");
  ideal_cmd->add_option("--series", cfg.series)->required();
  ideal_cmd->add_option("--lambda", cfg.lambda, "re,im")->required();

  auto* factor_cmd = app.add_subcommand("factor", "A(z) with f(z) - f(lambda) = A(z)(z - lambda)");
  factor_cmd->add_option("--series", cfg.series)->required();
  factor_cmd->add_option("--lambda", cfg.lambda, "re,im")->required();

  auto* quotient_cmd = app.add_subcommand("quotient-norm", "Bracket the quotient seminorm ||[f]||_r");
  quotient_cmd->add_option("--series", cfg.series)->required();
  quotient_cmd->add_option("--lambda", cfg.lambda, "re,im")->required();
  quotient_cmd->add_option("--r", cfg.r)->required();
  quotient_cmd->add_option("--kbudget", cfg.k_budget);

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification harness");
  verify_cmd->add_option("--theorem", cfg.theorem)
      ->required()
      ->check(CLI::IsMember({"t3-first", "t3-constant", "functional", "hurwitz"}));
  verify_cmd->add_option("--corpus-size", cfg.corpus_size);
  verify_cmd->add_option("--min-degree", cfg.min_degree);
  verify_cmd->add_option("--max-degree", cfg.max_degree);
  verify_cmd->add_option("--p", cfg.p);
  verify_cmd->add_option("--c", cfg.c);
  verify_cmd->add_option("--lambda", cfg.lambda, "re,im");
  verify_cmd->add_option("--r", cfg.r);
  verify_cmd->add_option("--sequence", cfg.sequence, "linear | constant | random");
  verify_cmd->add_option("--kmax", cfg.k_max);
  verify_cmd->add_option("--csv", cfg.csv_path, "Per-entry margins as CSV");

  auto* gen_cmd = app.add_subcommand("gen-corpus", "Emit a seeded corpus of random polynomials");
  gen_cmd->add_option("--corpus-size", cfg.corpus_size);
  gen_cmd->add_option("--min-degree", cfg.min_degree);
  gen_cmd->add_option("--max-degree", cfg.max_degree);

  auto emit = [&](const Json& j) {
    const std::string text = j.dump(2) + "\n";
    if (cfg.out_path.empty()) {
      out << text;
      return;
    }
    std::ofstream file(cfg.out_path);
    if (!file) throw UsageError("cannot write " + cfg.out_path);
    file << text;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    out << error_json("usage", e.what()).dump(2) << "\n";
    return kExitUsage;
  }

  try {
    Json result;
    if (*seminorm_cmd) result = run_seminorm(cfg);
    else if (*metric_cmd) result = run_metric(cfg);
    else if (*classify_cmd) result = run_classify(cfg);
    else if (*ideal_cmd) result = run_ideal_check(cfg);
    else if (*factor_cmd) result = run_factor(cfg);
    else if (*quotient_cmd) result = run_quotient_norm(cfg);
    else if (*verify_cmd) result = run_verify(cfg);
    else if (*gen_cmd) result = run_gen_corpus(cfg);
    require_finite(result);
    emit(result);
    return kExitOk;
  } catch (const UsageError& e) {
    out << error_json("usage", e.what()).dump(2) << "\n";
    return kExitUsage;
  } catch (const AccuracyError& e) {
    Json j = error_json("accuracy", e.what());
    j["error"]["residual"] = std::isfinite(e.residual()) ? Json(e.residual()) : Json(nullptr);
    j["error"]["nodes"] = e.nodes();
    out << j.dump(2) << "\n";
    return kExitAccuracy;
  } catch (const std::domain_error& e) {
    out << error_json("accuracy", e.what()).dump(2) << "\n";
    return kExitAccuracy;
  } catch (const std::overflow_error& e) {
    out << error_json("accuracy", e.what()).dump(2) << "\n";
    return kExitAccuracy;
  } catch (const std::invalid_argument& e) {
    out << error_json("usage", e.what()).dump(2) << "\n";
    return kExitUsage;
  }
}

}  // namespace fpalg
