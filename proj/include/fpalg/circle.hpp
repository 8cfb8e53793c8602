#pragma once

// Equispaced sampling of a truncated series on a circle |z| = r, and
// trapezoid circle means with nested node doubling.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "fpalg/errors.hpp"
#include "fpalg/series.hpp"

namespace fpalg {

std::size_t next_pow2(std::size_t n);

/// In-place radix-2 transform out[j] = sum_n in[n] exp(+2 pi i n j / K).
/// K = data.size() must be a power of two.
void fft_forward_positive(std::span<Complex> data);

/// Values f(r exp(2 pi i (j + shift) / K)) for j = 0..K-1. K must be a power
/// of two strictly larger than deg f; shift is 0 or 1/2.
std::vector<Complex> circle_values(const TruncatedSeries& f, double r, std::size_t K,
                                   bool half_shift = false);

/// phi(|w|^2) = |w|^p, with the p = 2 case kept exact.
std::function<double(double)> power_of_norm(double p);

/// Trapezoid mean of phi(|f(r e^{i theta})|^2) over [0, 2 pi); phi receives
/// the squared modulus. Starts from K0 nodes (power of two > deg f) and
/// doubles, reusing previous nodes, until |T_K - T_{K/2}| <= allowed(T_K) or
/// the next doubling would exceed max_nodes. `residual` is the last
/// difference; callers compare it against their tolerance.
template <class Phi, class Allowed>
Quadrature circle_mean(const TruncatedSeries& f, double r, Phi phi, std::size_t K0,
                       Allowed allowed, std::size_t max_nodes) {
  auto mean_of = [&](const std::vector<Complex>& vals, std::size_t stride) {
    double s = 0.0;
    std::size_t count = 0;
    for (std::size_t j = 0; j < vals.size(); j += stride) {
      s += phi(std::norm(vals[j]));
      ++count;
    }
    return s / static_cast<double>(count);
  };

  std::size_t K = K0;
  const auto base = circle_values(f, r, K);
  double current = mean_of(base, 1);
  double diff = std::abs(current - mean_of(base, 2));
  while (diff > allowed(current) && 2 * K <= max_nodes) {
    const auto mid = circle_values(f, r, K, /*half_shift=*/true);
    const double refined = 0.5 * (current + mean_of(mid, 1));
    diff = std::abs(refined - current);
    current = refined;
    K *= 2;
  }
  return {current, diff, K};
}

/// Fixed absolute/relative tolerance form.
template <class Phi>
Quadrature circle_mean(const TruncatedSeries& f, double r, Phi phi, std::size_t K0,
                       double abs_tol, double rel_tol, std::size_t max_nodes) {
  return circle_mean(
      f, r, phi, K0, [=](double t) { return std::max(abs_tol, rel_tol * std::abs(t)); }, max_nodes);
}

}  // namespace fpalg
