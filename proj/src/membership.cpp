#include "fpalg/membership.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

#include "fpalg/circle.hpp"

namespace fpalg {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_beta(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("rule parameter beta must lie in (0, 1)");
}

double log_plus(double log_abs) { return log_abs > 0.0 ? log_abs : 0.0; }

}  // namespace

CoefficientRule::CoefficientRule(Kind kind, std::string name, std::vector<double> params,
                                 std::function<double(std::size_t)> log_abs)
    : kind_(kind), name_(std::move(name)), params_(std::move(params)), log_abs_(std::move(log_abs)) {}

CoefficientRule CoefficientRule::power_table(std::vector<Complex> table) {
  for (const auto& c : table) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("power table entries must be finite");
    }
  }
  CoefficientRule rule(Kind::PowerTable, "power-table", {}, nullptr);
  rule.table_ = std::move(table);
  return rule;
}

CoefficientRule CoefficientRule::geometric(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw std::invalid_argument("geometric rule needs rho > 0");
  const double lr = std::log(rho);
  return CoefficientRule(Kind::Geometric, "geometric", {rho},
                         [lr](std::size_t n) { return lr * static_cast<double>(n); });
}

CoefficientRule CoefficientRule::stretched_exp(double eps, double beta) {
  require_beta(beta);
  if (!std::isfinite(eps)) throw std::invalid_argument("stretched-exp rule needs finite eps");
  return CoefficientRule(Kind::StretchedExp, "stretched-exp", {eps, beta}, [eps, beta](std::size_t n) {
    return eps * std::pow(static_cast<double>(n), beta);
  });
}

CoefficientRule CoefficientRule::stretched_exp_damped(double beta) {
  require_beta(beta);
  return CoefficientRule(Kind::StretchedExpDamped, "stretched-exp-damped", {beta}, [beta](std::size_t n) {
    const double x = static_cast<double>(n);
    return std::pow(x, beta) / std::log(x + 2.0);
  });
}

CoefficientRule CoefficientRule::custom(std::string name, std::function<double(std::size_t)> log_abs) {
  if (!log_abs) throw std::invalid_argument("custom rule needs a log-modulus function");
  return CoefficientRule(Kind::Custom, std::move(name), {}, std::move(log_abs));
}

CoefficientRule CoefficientRule::scaled(double log_factor) const {
  if (!std::isfinite(log_factor)) throw std::invalid_argument("log scale factor must be finite");
  CoefficientRule out = *this;
  out.log_factor_ += log_factor;
  return out;
}

double CoefficientRule::log_abs(std::size_t n) const {
  if (kind_ == Kind::PowerTable) {
    if (n >= table_.size() || table_[n] == Complex{}) return kNegInf;
    return std::log(std::abs(table_[n])) + log_factor_;
  }
  return log_abs_(n) + log_factor_;
}

Complex CoefficientRule::coefficient(std::size_t n) const {
  if (kind_ == Kind::PowerTable) {
    if (n >= table_.size()) return {};
    return table_[n] * std::exp(log_factor_);
  }
  return std::exp(log_abs(n));
}

TruncatedSeries CoefficientRule::truncate(std::size_t degree) const {
  std::vector<Complex> a(degree + 1);
  for (std::size_t n = 0; n <= degree; ++n) {
    if (log_abs(n) > 700.0) throw std::overflow_error("coefficient not representable in double");
    a[n] = coefficient(n);
  }
  return TruncatedSeries(std::move(a));
}

std::string to_string(CoefficientRule::Kind kind) {
  switch (kind) {
    case CoefficientRule::Kind::PowerTable: return "power-table";
    case CoefficientRule::Kind::Geometric: return "geometric";
    case CoefficientRule::Kind::StretchedExp: return "stretched-exp";
    case CoefficientRule::Kind::StretchedExpDamped: return "stretched-exp-damped";
    case CoefficientRule::Kind::Custom: return "custom";
  }
  return "unknown";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::InFp: return "InFp";
    case Verdict::NotInFp: return "NotInFp";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "unknown";
}

std::vector<double> growth_profile(const CoefficientRule& rule, const SpaceParams& sp,
                                   std::size_t n_max) {
  if (n_max < 16) throw std::invalid_argument("growth_profile: n_max must be >= 16");
  std::vector<double> s(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    s[n - 1] = log_plus(rule.log_abs(n)) / std::pow(static_cast<double>(n), sp.alpha());
  }
  return s;
}

double extrapolate_limsup(const std::vector<double>& profile, double alpha) {
  const std::size_t n_max = profile.size();
  if (n_max < 16) throw std::invalid_argument("extrapolate_limsup: profile too short");

  // Upper envelope e_n = max_{m >= n} s_m; its limit is the limsup.
  std::vector<double> envelope(profile);
  for (std::size_t i = n_max - 1; i-- > 0;) envelope[i] = std::max(envelope[i], envelope[i + 1]);

  const std::size_t lo = std::max<std::size_t>(16, n_max / 256);
  constexpr int kPoints = 64;
  std::vector<std::size_t> ns;
  const double step = std::log(static_cast<double>(n_max) / static_cast<double>(lo)) / (kPoints - 1);
  for (int k = 0; k < kPoints; ++k) {
    const auto n = static_cast<std::size_t>(
        std::llround(static_cast<double>(lo) * std::exp(step * k)));
    const std::size_t clamped = std::clamp(n, lo, n_max);
    if (ns.empty() || ns.back() != clamped) ns.push_back(clamped);
  }

  Eigen::MatrixXd X(static_cast<Eigen::Index>(ns.size()), 3);
  Eigen::VectorXd y(static_cast<Eigen::Index>(ns.size()));
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double n = static_cast<double>(ns[i]);
    const auto row = static_cast<Eigen::Index>(i);
    X(row, 0) = 1.0;
    X(row, 1) = 1.0 / std::log(n);
    X(row, 2) = std::pow(n, -alpha);
    y(row) = envelope[ns[i] - 1];
  }
  const Eigen::VectorXd coef = X.colPivHouseholderQr().solve(y);
  return std::max(0.0, coef(0));
}

MembershipVerdict classify(const CoefficientRule& rule, const SpaceParams& sp,
                           const ClassifyOptions& opts) {
  if (!(opts.threshold > 0.0)) throw std::invalid_argument("classify: threshold must be > 0");
  if (opts.n_max < 256) throw std::invalid_argument("classify: n_max must be >= 256");

  MembershipVerdict out;
  out.profile = growth_profile(rule, sp, opts.n_max);
  const auto& s = out.profile;
  auto window_max = [&](std::size_t n) {
    return *std::max_element(s.begin() + static_cast<std::ptrdiff_t>(n / 2 - 1),
                             s.begin() + static_cast<std::ptrdiff_t>(n));
  };

  out.window_begin = opts.n_max / 2;
  out.window_end = opts.n_max;
  out.window_max = window_max(opts.n_max);
  out.window_min = *std::min_element(s.begin() + static_cast<std::ptrdiff_t>(opts.n_max / 2 - 1), s.end());

  for (std::size_t n = opts.n_max; n >= 64; n /= 2) out.checkpoints.push_back({n, window_max(n)});
  std::reverse(out.checkpoints.begin(), out.checkpoints.end());

  bool non_increasing = true;
  bool all_above = true;
  for (std::size_t i = 0; i < out.checkpoints.size(); ++i) {
    const double w = out.checkpoints[i].window_max;
    if (w < opts.threshold) all_above = false;
    if (i > 0) {
      const double prev = out.checkpoints[i - 1].window_max;
      if (w > prev * (1.0 + 1e-12) + 1e-15) non_increasing = false;
    }
  }

  out.limsup_estimate = extrapolate_limsup(s, sp.alpha());
  if (out.limsup_estimate <= opts.threshold && non_increasing) {
    out.verdict = Verdict::InFp;
  } else if (out.limsup_estimate >= opts.threshold && all_above) {
    out.verdict = Verdict::NotInFp;
  } else {
    out.verdict = Verdict::Inconclusive;
  }
  return out;
}

std::vector<double> radial_growth_probe(const TruncatedSeries& f, const SpaceParams& sp,
                                        const std::vector<double>& r_grid) {
  std::vector<double> out;
  out.reserve(r_grid.size());
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    const double r = r_grid[i];
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("radial_growth_probe: r must lie in [0, 1)");
    if (i > 0 && !(r > r_grid[i - 1])) throw std::invalid_argument("radial_growth_probe: r_grid must increase");
    const double m = max_modulus(f, r);
    const double lp = m > 1.0 ? std::log(m) : 0.0;
    out.push_back(std::pow(1.0 - r, 1.0 / sp.p()) * lp);
  }
  return out;
}

std::vector<double> radial_growth_probe(const CoefficientRule& rule, std::size_t degree,
                                        const SpaceParams& sp, const std::vector<double>& r_grid) {
  if (!r_grid.empty()) {
    // A truncation resolves radius r only with ~1/(1-r) terms; require twice that.
    const double r_max = r_grid.back();
    if (static_cast<double>(degree) < 2.0 / (1.0 - r_max)) {
      throw std::invalid_argument("radial_growth_probe: truncation degree too low for r_grid");
    }
  }
  return radial_growth_probe(rule.truncate(degree), sp, r_grid);
}

Quadrature privalov_mean(const TruncatedSeries& f, const SpaceParams& sp, double r,
                         const PrivalovOptions& opts) {
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("privalov_mean: r must lie in [0, 1)");
  const double p = sp.p();
  auto phi = [p](double norm) { return norm > 1.0 ? std::pow(0.5 * std::log(norm), p) : 0.0; };
  if (f.degree() == 0 || r == 0.0) return {phi(std::norm(f[0])), 0.0, 1};
  const std::size_t K0 = next_pow2(std::max<std::size_t>(256, 4 * f.degree() + 4));
  const auto q = circle_mean(f, r, phi, K0, opts.tol, 0.0, opts.max_nodes);
  if (q.residual > opts.tol) {
    throw AccuracyError("privalov_mean: circle quadrature did not converge", q.residual, q.nodes);
  }
  return q;
}

}  // namespace fpalg
