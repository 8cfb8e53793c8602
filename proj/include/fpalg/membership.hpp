#pragma once

// Membership probes for F^p: the coefficient-growth criterion
// |a_n| <= exp(c_n n^{1/(p+1)}) with c_n -> 0, the radial growth quantity
// (1-r)^{1/p} log+ M_inf(r, f), and the Privalov circle mean of (log+|f|)^p.
//
// Verdicts are numerical evidence at a finite horizon n_max, not proofs.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "fpalg/seminorms.hpp"
#include "fpalg/series.hpp"

namespace fpalg {

/// Closed-form coefficient sequence n -> a_n, evaluated in log space.
class CoefficientRule {
 public:
  enum class Kind { PowerTable, Geometric, StretchedExp, StretchedExpDamped, Custom };

  /// Explicit table; coefficients past the end are zero.
  static CoefficientRule power_table(std::vector<Complex> table);
  /// a_n = rho^n, rho > 0.
  static CoefficientRule geometric(double rho);
  /// a_n = exp(eps n^beta), beta in (0, 1).
  static CoefficientRule stretched_exp(double eps, double beta);
  /// a_n = exp(n^beta / log(n + 2)), beta in (0, 1).
  static CoefficientRule stretched_exp_damped(double beta);
  /// Named closed form given by its log-modulus; -infinity encodes a_n = 0.
  static CoefficientRule custom(std::string name, std::function<double(std::size_t)> log_abs);

  /// Multiplies every coefficient by exp(log_factor).
  CoefficientRule scaled(double log_factor) const;

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::vector<double>& params() const { return params_; }

  /// log |a_n|, -infinity when a_n = 0. Never materializes a_n.
  double log_abs(std::size_t n) const;
  /// a_n itself; only safe while log_abs(n) < ~709.
  Complex coefficient(std::size_t n) const;
  /// Degree-`degree` truncation. Throws std::overflow_error if a coefficient
  /// is not representable.
  TruncatedSeries truncate(std::size_t degree) const;

 private:
  CoefficientRule(Kind kind, std::string name, std::vector<double> params,
                  std::function<double(std::size_t)> log_abs);

  Kind kind_;
  std::string name_;
  std::vector<double> params_;
  std::function<double(std::size_t)> log_abs_;
  std::vector<Complex> table_;
  double log_factor_ = 0.0;
};

std::string to_string(CoefficientRule::Kind kind);

/// s_n = log+|a_n| / n^{1/(p+1)} for n = 1..n_max (index 0 holds s_1).
std::vector<double> growth_profile(const CoefficientRule& rule, const SpaceParams& sp,
                                   std::size_t n_max);

enum class Verdict { InFp, NotInFp, Inconclusive };
std::string to_string(Verdict v);

struct Checkpoint {
  std::size_t n = 0;          // window is [n/2, n]
  double window_max = 0.0;
};

struct MembershipVerdict {
  Verdict verdict = Verdict::Inconclusive;
  /// Extrapolated limsup of s_n (fit intercept, clamped at 0).
  double limsup_estimate = 0.0;
  std::size_t window_begin = 0;  // evidence window [window_begin, window_end]
  std::size_t window_end = 0;
  double window_max = 0.0;
  double window_min = 0.0;
  std::vector<Checkpoint> checkpoints;  // ascending n, ending at n_max
  std::vector<double> profile;          // s_1 .. s_{n_max}
};

struct ClassifyOptions {
  double threshold = 0.01;
  std::size_t n_max = std::size_t{1} << 14;
};

MembershipVerdict classify(const CoefficientRule& rule, const SpaceParams& sp,
                           const ClassifyOptions& opts = {});

/// Least-squares limsup extrapolation used by classify, exposed for tests:
/// fits the upper envelope max_{m >= n} s_m on {1, 1/log n, n^{-alpha}}.
double extrapolate_limsup(const std::vector<double>& profile, double alpha);

/// (1 - r)^{1/p} log+ M_inf(r, f) for each r in an increasing grid in [0, 1).
std::vector<double> radial_growth_probe(const TruncatedSeries& f, const SpaceParams& sp,
                                        const std::vector<double>& r_grid);
std::vector<double> radial_growth_probe(const CoefficientRule& rule, std::size_t degree,
                                        const SpaceParams& sp, const std::vector<double>& r_grid);

struct PrivalovOptions {
  /// Absolute. log+ has a kink where |f| = 1, so the trapezoid converges
  /// only algebraically there.
  double tol = 1e-10;
  std::size_t max_nodes = std::size_t{1} << 20;
};

/// Circle mean of (log+|f(r e^{i theta})|)^p.
Quadrature privalov_mean(const TruncatedSeries& f, const SpaceParams& sp, double r,
                         const PrivalovOptions& opts = {});

}  // namespace fpalg
