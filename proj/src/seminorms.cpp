#include "fpalg/seminorms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "fpalg/circle.hpp"

namespace fpalg {

SpaceParams::SpaceParams(double p) : p_(p), alpha_(1.0 / (p + 1.0)) {
  if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("SpaceParams: p must be > 1");
}

SeminormSpec::SeminormSpec(SeminormFamily family, double c) : family(family), c(c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("SeminormSpec: c must be > 0");
}

namespace {

void require_positive_c(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("seminorm parameter c must be > 0");
}

// Gauss-Kronrod 7/15 on [-1, 1]. Odd-indexed Kronrod nodes are the Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double kronrod, rule_error;
  double circle_residual;
  double error() const { return rule_error + circle_residual; }
  bool operator<(const Panel& o) const { return error() < o.error(); }
};

// Integrand of the radial seminorm in u = (1 - r)^{-1/p}:
//   p u^{-p-1} exp(-c u) M_p(1 - u^{-p}, f).
// The circle mean at each node only has to be as accurate as its weight
// demands: the error density in u is held to budget * sqrt(jac) / S, where
// S >= int sqrt(jac) du, so the integrated circle error stays below budget.
class RadialIntegrand {
 public:
  RadialIntegrand(const TruncatedSeries& f, double p, double c, double budget,
                  const IntegralOptions& opts)
      : f_(f), p_(p), c_(c), budget_(budget), opts_(opts), phi_(power_of_norm(p)),
        k0_(next_pow2(std::max<std::size_t>(256, 4 * f.degree() + 4))) {}

  // Returns the integrand and the propagated circle-quadrature error.
  std::pair<double, double> operator()(double u) const {
    const double jac = p_ * std::pow(u, -p_ - 1.0) * std::exp(-c_ * u);
    if (jac == 0.0) return {0.0, 0.0};
    const double r = 1.0 - std::pow(u, -p_);
    if (f_.degree() == 0 || r <= 0.0) return {jac * std::abs(f_[0]), 0.0};
    // |dM| <= budget / (S sqrt(jac))  <=>  |dT| <= p T^{1 - 1/p} |dM|, T = M^p.
    const double p = p_;
    const double scale = budget_ / std::sqrt(jac);
    const double rel = opts_.circle_rel_tol;
    auto allowed = [p, scale, rel](double t) {
      return std::max(rel * t, p * std::pow(t, 1.0 - 1.0 / p) * scale);
    };
    const auto q = circle_mean(f_, r, phi_, k0_, allowed, opts_.circle_max_nodes);
    const double mp = std::pow(q.value, 1.0 / p_);
    const double err = q.value > 0.0 ? jac * mp * q.residual / (p_ * q.value) : 0.0;
    return {jac * mp, err};
  }

 private:
  const TruncatedSeries& f_;
  double p_, c_, budget_;
  IntegralOptions opts_;
  std::function<double(double)> phi_;
  std::size_t k0_;
};

Panel integrate_panel(const RadialIntegrand& g, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<double, 15> fv{};
  double circle_err = 0.0;
  {
    const auto [fc, ec] = g(centre);
    fv[14] = fc;
    circle_err += kWgk[7] * ec;
  }
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const auto [f1, e1] = g(centre - dx);
    const auto [f2, e2] = g(centre + dx);
    fv[2 * j] = f1;
    fv[2 * j + 1] = f2;
    circle_err += kWgk[j] * (e1 + e2);
  }
  double kronrod = kWgk[7] * fv[14];
  double gauss = kWg[3] * fv[14];
  double abs_sum = kWgk[7] * std::abs(fv[14]);
  for (std::size_t j = 0; j < 7; ++j) {
    kronrod += kWgk[j] * (fv[2 * j] + fv[2 * j + 1]);
    abs_sum += kWgk[j] * (std::abs(fv[2 * j]) + std::abs(fv[2 * j + 1]));
    if (j % 2 == 1) gauss += kWg[j / 2] * (fv[2 * j] + fv[2 * j + 1]);
  }
  // |K - G| is kept unscaled: radial kinks where zeros cross a circle make
  // the usual smoothness-based rescaling over-optimistic.
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  const double err = std::max(std::abs((kronrod - gauss) * half), 50.0 * kEps * abs_sum * half);
  return {a, b, kronrod * half, err, circle_err * half};
}

// Smallest U >= 1 (to bisection accuracy) with B p U^{-p-1} e^{-cU} / c <= target.
double radial_cutoff(double bound, double p, double c, double target) {
  auto tail = [&](double u) { return bound * p * std::pow(u, -p - 1.0) * std::exp(-c * u) / c; };
  if (tail(1.0) <= target) return 1.0;
  double hi = 1.0 + std::max(0.0, std::log(bound * p / (c * target)) / c);
  while (tail(hi) > target) hi *= 2.0;
  double lo = 1.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (tail(mid) > target ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace

double coeff_seminorm(const TruncatedSeries& f, const SpaceParams& sp, double c) {
  require_positive_c(c);
  double s = 0.0;
  for (std::size_t n = 0; n < f.size(); ++n) {
    if (f[n] == Complex{}) continue;
    s += std::abs(f[n]) * std::exp(-c * std::pow(static_cast<double>(n), sp.alpha()));
  }
  return s;
}

Quadrature integral_seminorm(const TruncatedSeries& f, const SpaceParams& sp, double c,
                             const IntegralOptions& opts) {
  require_positive_c(c);
  if (f.is_zero()) return {0.0, 0.0, 0};

  const double p = sp.p();
  const double bound = f.abs_sum();
  const double tail_target = opts.tol * 1e-3;
  const double upper = radial_cutoff(bound, p, c, tail_target);
  const double tail = bound * p * std::pow(upper, -p - 1.0) * std::exp(-c * upper) / c;
  if (upper <= 1.0) return {0.0, tail, 0};

  // A quarter of the tolerance is shared out to the circle means.
  // int_1^inf sqrt(p u^{-p-1} e^{-cu}) du <= sqrt(p) min(2 / (p - 1), 2 / c).
  const double sqrt_mass = std::sqrt(p) * std::min(2.0 / (p - 1.0), 2.0 / c);
  const RadialIntegrand g(f, p, c, 0.25 * opts.tol / sqrt_mass, opts);
  std::priority_queue<Panel> panels;
  constexpr int kInitialPanels = 4;
  std::size_t nodes = 0;
  double value = 0.0;
  double error = 0.0;
  for (int i = 0; i < kInitialPanels; ++i) {
    const double a = 1.0 + (upper - 1.0) * i / kInitialPanels;
    const double b = 1.0 + (upper - 1.0) * (i + 1) / kInitialPanels;
    Panel panel = integrate_panel(g, a, b);
    nodes += 15;
    value += panel.kronrod;
    error += panel.error();
    panels.push(panel);
  }

  while (error + tail > opts.tol && nodes + 30 <= opts.node_budget) {
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = integrate_panel(g, worst.a, mid);
    const Panel right = integrate_panel(g, mid, worst.b);
    nodes += 30;
    value += left.kronrod + right.kronrod - worst.kronrod;
    error += left.error() + right.error() - worst.error();
    panels.push(left);
    panels.push(right);
  }

  // Re-sum to shed drift from the incremental updates.
  value = 0.0;
  error = 0.0;
  while (!panels.empty()) {
    value += panels.top().kronrod;
    error += panels.top().error();
    panels.pop();
  }
  const double residual = error + tail;
  if (residual > opts.tol) {
    throw AccuracyError("integral_seminorm: radial quadrature did not converge", residual, nodes);
  }
  return {value, residual, nodes};
}

Quadrature seminorm(const TruncatedSeries& f, const SpaceParams& sp, const SeminormSpec& spec,
                    const IntegralOptions& opts) {
  if (spec.family == SeminormFamily::Coefficient) {
    return {coeff_seminorm(f, sp, spec.c), 0.0, f.size()};
  }
  return integral_seminorm(f, sp, spec.c, opts);
}

Quadrature privalov_metric(const TruncatedSeries& f, const TruncatedSeries& g,
                           const SpaceParams& sp, const MetricOptions& opts) {
  const TruncatedSeries h = sub(f, g);
  if (h.is_zero()) return {0.0, 0.0, 0};
  const double p = sp.p();
  const std::size_t K0 = next_pow2(std::max(opts.min_nodes, 8 * h.degree() + 8));
  const auto q = circle_mean(
      h, 1.0, [p](double norm) { return std::pow(std::log1p(std::sqrt(norm)), p); }, K0, opts.tol, 0.0,
      opts.max_nodes);
  const double value = std::pow(q.value, 1.0 / p);
  // d(T^{1/p}) = T^{1/p - 1} dT / p, or the crude T^{1/p} bound near zero.
  const double residual = q.value > 0.0 ? value * q.residual / (p * q.value)
                                        : std::pow(q.residual, 1.0 / p);
  if (q.residual > opts.tol) {
    throw AccuracyError("privalov_metric: circle quadrature did not converge", residual, q.nodes);
  }
  return {value, residual, q.nodes};
}

EnvelopeMetric envelope_metric(const TruncatedSeries& f, const TruncatedSeries& g,
                               const SpaceParams& sp, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("envelope_metric: tol must be > 0");
  const TruncatedSeries h = sub(f, g);
  const double exponent = sp.p() / (sp.p() + 1.0);
  EnvelopeMetric out;
  double weight = 1.0;
  for (std::size_t n = 1;; ++n) {
    weight *= 0.5;
    const double u = coeff_seminorm(h, sp, std::pow(static_cast<double>(n), -exponent));
    out.value += weight * u / (1.0 + u);
    out.terms = n;
    if (weight < tol) break;
  }
  out.tail_bound = weight;
  return out;
}

Theorem3Constants theorem3_constants(const SpaceParams& sp, double c) {
  require_positive_c(c);
  const double e = sp.p() / (sp.p() + 1.0);
  return {std::pow(c, e), std::pow(c / 12.0, e)};
}

}  // namespace fpalg
