#pragma once

// The two seminorm families on F^p and the metrics d_p and lambda_p.
//
//   coefficient:  ||f||_{p,c}   = sum_n |a_n| exp(-c n^{1/(p+1)})
//   integral:     |||f|||_{p,c} = int_0^1 exp(-c (1-r)^{-1/p}) M_p(r, f) dr

#include <cstddef>
#include <utility>

#include "fpalg/errors.hpp"
#include "fpalg/series.hpp"

namespace fpalg {

/// Exponent p > 1 of F^p together with alpha = 1/(p+1).
class SpaceParams {
 public:
  explicit SpaceParams(double p);
  double p() const { return p_; }
  double alpha() const { return alpha_; }

 private:
  double p_;
  double alpha_;
};

enum class SeminormFamily { Coefficient, Integral };

struct SeminormSpec {
  SeminormSpec(SeminormFamily family, double c);
  SeminormFamily family;
  double c;
};

double coeff_seminorm(const TruncatedSeries& f, const SpaceParams& sp, double c);

struct IntegralOptions {
  double tol = 1e-9;              // absolute
  std::size_t node_budget = 20000;  // radial nodes
  double circle_rel_tol = 1e-11;
  std::size_t circle_max_nodes = std::size_t{1} << 16;
};

/// Radial integral seminorm. Throws AccuracyError if the estimated error
/// stays above opts.tol once the node budget is spent.
Quadrature integral_seminorm(const TruncatedSeries& f, const SpaceParams& sp, double c,
                             const IntegralOptions& opts = {});

/// Evaluates either family; the coefficient family reports zero residual
/// and the number of stored coefficients as `nodes`.
Quadrature seminorm(const TruncatedSeries& f, const SpaceParams& sp, const SeminormSpec& spec,
                    const IntegralOptions& opts = {});

struct MetricOptions {
  double tol = 1e-12;  // absolute, on the p-th power mean
  std::size_t min_nodes = 1024;
  std::size_t max_nodes = std::size_t{1} << 20;
};

/// Privalov metric d_p(f, g) from boundary values on |z| = 1.
Quadrature privalov_metric(const TruncatedSeries& f, const TruncatedSeries& g,
                           const SpaceParams& sp, const MetricOptions& opts = {});

struct EnvelopeMetric {
  double value = 0.0;
  double tail_bound = 0.0;
  std::size_t terms = 0;
};

/// lambda_p(f, g) = sum_n 2^{-n} u_n / (1 + u_n), u_n = ||f - g||_{p, n^{-p/(p+1)}},
/// summed through the first n with 2^{-n} < tol.
EnvelopeMetric envelope_metric(const TruncatedSeries& f, const TruncatedSeries& g,
                               const SpaceParams& sp, double tol = 0x1p-40);

struct Theorem3Constants {
  double c1;  // c^{p/(p+1)}
  double c2;  // (c/12)^{p/(p+1)}
};

Theorem3Constants theorem3_constants(const SpaceParams& sp, double c);

}  // namespace fpalg
