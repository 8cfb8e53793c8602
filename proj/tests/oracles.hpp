#pragma once

// Reference computations for the tests. Deliberately naive: direct power
// sums, double loops, dense sampling. Nothing here calls into the library
// beyond reading coefficients.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "fpalg/series.hpp"

namespace oracle {

using fpalg::Complex;
using fpalg::TruncatedSeries;

// Seeded generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(eng_);
  }
  std::size_t index(std::size_t lo, std::size_t hi) {  // inclusive
    return std::uniform_int_distribution<std::size_t>(lo, hi)(eng_);
  }
  Complex gaussian() {
    std::normal_distribution<double> nd(0.0, 1.0);
    return {nd(eng_), nd(eng_)};
  }
  // Uniform point of the disk |z| <= radius.
  Complex disk(double radius) {
    const double rho = radius * std::sqrt(uniform());
    return std::polar(rho, uniform(0.0, 2.0 * std::numbers::pi));
  }
  TruncatedSeries series(std::size_t degree, double decay = 0.0) {
    std::vector<Complex> a(degree + 1);
    for (std::size_t n = 0; n <= degree; ++n) {
      a[n] = gaussian() * std::pow(static_cast<double>(std::max<std::size_t>(n, 1)), -decay);
    }
    return TruncatedSeries(std::move(a));
  }

 private:
  std::mt19937_64 eng_;
};

inline Complex power_sum(const TruncatedSeries& f, Complex z) {
  Complex s = 0.0;
  for (std::size_t n = 0; n < f.size(); ++n) s += f[n] * std::pow(z, static_cast<int>(n));
  return s;
}

inline std::vector<Complex> convolve(const TruncatedSeries& f, const TruncatedSeries& g) {
  std::vector<Complex> out(f.size() + g.size() - 1, 0.0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  return out;
}

// (sum |a_n|^2 r^{2n})^{1/2}
inline double parseval_m2(const TruncatedSeries& f, double r) {
  double s = 0.0;
  for (std::size_t n = 0; n < f.size(); ++n) s += std::norm(f[n]) * std::pow(r, 2.0 * n);
  return std::sqrt(s);
}

inline double dense_circle_max(const TruncatedSeries& f, double r, std::size_t samples = 1000000) {
  double best = 0.0;
  for (std::size_t j = 0; j < samples; ++j) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples);
    best = std::max(best, std::abs(power_sum(f, std::polar(r, t))));
  }
  return best;
}

// Plain trapezoid sum of phi(|f|) on the circle, each sample by direct
// evaluation with precomputed powers.
inline double dense_circle_mean(const TruncatedSeries& f, double r,
                                const std::function<double(double)>& phi,
                                std::size_t samples = 100000) {
  std::vector<double> rn(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) rn[n] = std::pow(r, static_cast<double>(n));
  double s = 0.0;
  for (std::size_t j = 0; j < samples; ++j) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples);
    Complex v = 0.0;
    for (std::size_t n = 0; n < f.size(); ++n) v += f[n] * rn[n] * std::polar(1.0, t * n);
    s += phi(std::abs(v));
  }
  return s / static_cast<double>(samples);
}

// int_0^1 exp(-c (1-r)^{-1/p}) g(r) dr by composite Simpson in s = 1 - r on
// the graded mesh s = t^4, t uniform on [0, 1] with `nodes` panels.
inline double graded_radial(double p, double c, const std::function<double(double)>& g,
                            std::size_t nodes = 1000000) {
  if (nodes % 2) ++nodes;
  auto integrand = [&](double t) {
    if (t <= 0.0) return 0.0;
    const double s = t * t * t * t;
    const double w = std::exp(-c * std::pow(s, -1.0 / p));
    return w * g(1.0 - s) * 4.0 * t * t * t;
  };
  const double h = 1.0 / static_cast<double>(nodes);
  double sum = integrand(0.0) + integrand(1.0);
  for (std::size_t i = 1; i < nodes; ++i) {
    sum += (i % 2 ? 4.0 : 2.0) * integrand(h * static_cast<double>(i));
  }
  return sum * h / 3.0;
}

// int_0^1 exp(-c s^{-1/p}) ds, 20 digits from an independent arbitrary
// precision computation.
struct WeightMass {
  double p, c, value;
};
inline constexpr WeightMass kWeightMass[] = {
    {2.0, 1.0, 0.21938393439552027368},  {1.5, 0.5, 0.39768974542335144803},
    {2.0, 0.5, 0.44320872855035691474},  {3.0, 2.0, 0.075068523640980905519},
    {1.5, 1.0, 0.1897317293898816314},   {3.0, 1.0, 0.25818747397368218476},
    {2.0, 0.190785707092221977968, 0.71457721957091438889},
};

}  // namespace oracle
