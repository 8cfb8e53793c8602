#include "fpalg/series.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "fpalg/circle.hpp"

namespace fpalg {

TruncatedSeries::TruncatedSeries() : coeffs_{Complex{}} {}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries needs at least one coefficient");
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("TruncatedSeries coefficients must be finite");
    }
  }
}

TruncatedSeries::TruncatedSeries(std::initializer_list<Complex> coeffs)
    : TruncatedSeries(std::vector<Complex>(coeffs)) {}

TruncatedSeries TruncatedSeries::constant(Complex c) { return TruncatedSeries({c}); }

TruncatedSeries TruncatedSeries::monomial(std::size_t n, Complex c) {
  std::vector<Complex> a(n + 1, Complex{});
  a[n] = c;
  return TruncatedSeries(std::move(a));
}

TruncatedSeries TruncatedSeries::linear_factor(Complex lambda) {
  return TruncatedSeries({-lambda, Complex{1.0}});
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c == Complex{}; });
}

double TruncatedSeries::abs_sum() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::abs(c);
  return s;
}

double TruncatedSeries::abs_sum(double r) const {
  double s = 0.0;
  double rn = 1.0;
  for (const auto& c : coeffs_) {
    s += std::abs(c) * rn;
    rn *= r;
  }
  return s;
}

DiskPoint::DiskPoint(Complex value) : value_(value) {
  if (!(std::abs(value) < 1.0)) throw std::invalid_argument("DiskPoint must satisfy |lambda| < 1");
}

Complex eval(const TruncatedSeries& f, Complex z) {
  const auto a = f.coeffs();
  Complex acc = a.back();
  for (std::size_t n = a.size() - 1; n-- > 0;) acc = acc * z + a[n];
  return acc;
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
  std::vector<Complex> out(std::max(f.size(), g.size()), Complex{});
  for (std::size_t n = 0; n < f.size(); ++n) out[n] += f[n];
  for (std::size_t n = 0; n < g.size(); ++n) out[n] += g[n];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g) {
  std::vector<Complex> out(std::max(f.size(), g.size()), Complex{});
  for (std::size_t n = 0; n < f.size(); ++n) out[n] += f[n];
  for (std::size_t n = 0; n < g.size(); ++n) out[n] -= g[n];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries scale(const TruncatedSeries& f, Complex s) {
  std::vector<Complex> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& c : out) c *= s;
  return TruncatedSeries(std::move(out));
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g,
                    std::optional<std::size_t> trunc) {
  std::size_t deg = f.degree() + g.degree();
  if (trunc) deg = std::min(deg, *trunc);
  std::vector<Complex> out(deg + 1, Complex{});
  for (std::size_t i = 0; i < f.size() && i <= deg; ++i) {
    const Complex fi = f[i];
    const std::size_t jmax = std::min(g.degree(), deg - i);
    for (std::size_t j = 0; j <= jmax; ++j) out[i + j] += fi * g[j];
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries synthetic_divide(const TruncatedSeries& f, DiskPoint lambda) {
  const std::size_t N = f.degree();
  if (N == 0) return TruncatedSeries();
  const Complex l = lambda.value();
  // Horner's recurrence: A_{N-1} = a_N, A_{k-1} = a_k + lambda A_k.
  std::vector<Complex> A(N);
  A[N - 1] = f[N];
  for (std::size_t k = N - 1; k >= 1; --k) A[k - 1] = f[k] + l * A[k];
  return TruncatedSeries(std::move(A));
}

namespace {

std::size_t sample_count(const TruncatedSeries& f, const CircleOptions& opts) {
  return next_pow2(std::max(opts.min_samples, 4 * f.degree() + 4));
}

double golden_max(const TruncatedSeries& f, double r, double lo, double hi, int iterations) {
  constexpr double kInvPhi = 0.6180339887498949;
  auto value = [&](double t) { return std::abs(eval(f, std::polar(r, t))); };
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = value(x1);
  double f2 = value(x2);
  for (int it = 0; it < iterations; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = value(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = value(x1);
    }
  }
  return std::max(f1, f2);
}

}  // namespace

std::function<double(double)> power_of_norm(double p) {
  if (p == 2.0) return [](double n) { return n; };
  // 2p integral: |w|^p = (|w|^2)^{1/4 * 2p} through square roots, avoiding pow.
  const double twice = 2.0 * p;
  if (twice == std::round(twice) && twice <= 16.0) {
    const int m = static_cast<int>(twice);
    return [m](double n) {
      const double q = std::sqrt(std::sqrt(n));
      double out = 1.0;
      for (int i = 0; i < m; ++i) out *= q;
      return out;
    };
  }
  const double half = 0.5 * p;
  return [half](double n) { return std::pow(n, half); };
}

double max_modulus(const TruncatedSeries& f, double r, const CircleOptions& opts) {
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("max_modulus: r must lie in [0, 1)");
  if (f.is_zero()) return 0.0;
  if (f.degree() == 0 || r == 0.0) return std::abs(f[0]);

  const std::size_t K = sample_count(f, opts);
  const auto vals = circle_values(f, r, K);
  std::vector<double> mod(K);
  for (std::size_t j = 0; j < K; ++j) mod[j] = std::abs(vals[j]);

  // Local maxima of the sampled modulus, best first.
  std::vector<std::size_t> peaks;
  for (std::size_t j = 0; j < K; ++j) {
    const double prev = mod[(j + K - 1) % K];
    const double next = mod[(j + 1) % K];
    if (mod[j] >= prev && mod[j] >= next) peaks.push_back(j);
  }
  const std::size_t keep = std::min(opts.refine_candidates, peaks.size());
  std::partial_sort(peaks.begin(), peaks.begin() + static_cast<std::ptrdiff_t>(keep), peaks.end(),
                    [&](std::size_t a, std::size_t b) { return mod[a] > mod[b]; });

  double best = *std::max_element(mod.begin(), mod.end());
  const double h = 2.0 * std::numbers::pi / static_cast<double>(K);
  for (std::size_t i = 0; i < keep; ++i) {
    const double centre = h * static_cast<double>(peaks[i]);
    best = std::max(best, golden_max(f, r, centre - h, centre + h, opts.refine_iterations));
  }
  return best;
}

double max_modulus_sampling_bound(const TruncatedSeries& f, double r, const CircleOptions& opts) {
  double lipschitz = 0.0;
  double rn = 1.0;
  for (std::size_t n = 0; n < f.size(); ++n) {
    lipschitz += static_cast<double>(n) * std::abs(f[n]) * rn;
    rn *= r;
  }
  const double h = 2.0 * std::numbers::pi / static_cast<double>(sample_count(f, opts));
  return 0.5 * lipschitz * h;
}

double mean_modulus_p(const TruncatedSeries& f, double r, double p, const MeanOptions& opts) {
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("mean_modulus_p: r must lie in [0, 1)");
  if (!(p >= 1.0)) throw std::invalid_argument("mean_modulus_p: p must be >= 1");
  if (f.is_zero()) return 0.0;
  if (f.degree() == 0 || r == 0.0) return std::abs(f[0]);
  const std::size_t K0 = next_pow2(std::max<std::size_t>(256, 4 * f.degree() + 4));
  const auto q = circle_mean(
      f, r, power_of_norm(p), K0, 0.0, opts.rel_tol, opts.max_nodes);
  if (q.residual > opts.rel_tol * q.value) {
    throw AccuracyError("mean_modulus_p: circle quadrature did not converge", q.residual, q.nodes);
  }
  return std::pow(q.value, 1.0 / p);
}

}  // namespace fpalg
