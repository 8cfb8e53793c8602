#include "fpalg/json_io.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace fpalg {
namespace {

double finite_or_throw(double x, const char* what) {
  if (!std::isfinite(x)) throw std::domain_error(std::string("non-finite value in ") + what);
  return x;
}

Json finite_map(const std::map<std::string, double>& m, const char* what) {
  Json j = Json::object();
  for (const auto& [k, v] : m) j[k] = finite_or_throw(v, what);
  return j;
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument("complex value must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json series_to_json(const TruncatedSeries& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(complex_to_json(c));
  return Json{{"coeffs", coeffs}};
}

TruncatedSeries series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw std::invalid_argument("series JSON must be {\"coeffs\": [[re, im], ...]}");
  }
  std::vector<Complex> a;
  for (const auto& c : j["coeffs"]) a.push_back(complex_from_json(c));
  return TruncatedSeries(std::move(a));
}

TruncatedSeries parse_series(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid series JSON: ") + e.what());
  }
  return series_from_json(j);
}

Json corpus_to_json(const Corpus& corpus) {
  Json entries = Json::array();
  for (const auto& f : corpus.entries) entries.push_back(series_to_json(f));
  return Json{{"seed", corpus.spec.seed},
              {"generator",
               {{"size", corpus.spec.size},
                {"min_degree", corpus.spec.min_degree},
                {"max_degree", corpus.spec.max_degree},
                {"decay_exponents", corpus.spec.decay_exponents}}},
              {"entries", entries}};
}

Json report_to_json(const VerificationReport& report) {
  Json j = {{"theorem", report.theorem},
            {"parameters", finite_map(report.parameters, "report parameters")},
            {"seed", report.seed},
            {"counts",
             {{"checked", report.checked},
              {"passed", report.passed},
              {"failed", report.failed},
              {"quadrature_failures", report.quadrature_failures}}},
            {"violations", report.failed},
            {"worst_margin", finite_or_throw(report.worst_margin, "worst margin")},
            {"constants", finite_map(report.constants, "report constants")},
            {"inconclusive", report.inconclusive}};
  if (report.worst_index) {
    j["worst_entry"] = {{"seed", report.seed}, {"index", *report.worst_index}};
  } else {
    j["worst_entry"] = nullptr;
  }
  return j;
}

void write_report_csv(const VerificationReport& report, std::ostream& out) {
  out << "index,lhs,rhs,margin,ok,note\n";
  out.precision(17);
  for (const auto& e : report.entries) {
    out << e.index << ',' << e.lhs << ',' << e.rhs << ',' << e.margin << ',' << (e.ok ? 1 : 0) << ','
        << e.note << '\n';
  }
}

Json verdict_to_json(const MembershipVerdict& v, const CoefficientRule& rule, const SpaceParams& sp,
                     const ClassifyOptions& opts) {
  Json checkpoints = Json::array();
  for (const auto& c : v.checkpoints) {
    checkpoints.push_back({{"n", c.n}, {"window_max", finite_or_throw(c.window_max, "checkpoint")}});
  }
  Json profile = Json::array();
  for (double s : v.profile) profile.push_back(finite_or_throw(s, "profile"));
  return Json{{"verdict", to_string(v.verdict)},
              {"note", "numerical evidence at horizon n_max"},
              {"rule", {{"kind", to_string(rule.kind())}, {"name", rule.name()}, {"params", rule.params()}}},
              {"p", sp.p()},
              {"n_max", opts.n_max},
              {"threshold", opts.threshold},
              {"limsup_estimate", finite_or_throw(v.limsup_estimate, "limsup estimate")},
              {"evidence_window", {v.window_begin, v.window_end}},
              {"window_max", v.window_max},
              {"window_min", v.window_min},
              {"checkpoints", checkpoints},
              {"profile", profile}};
}

}  // namespace fpalg
