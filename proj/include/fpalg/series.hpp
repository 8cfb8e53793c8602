#pragma once

// Truncated Taylor series on the unit disk: value type, ring operations,
// point evaluation, synthetic division and circle/radial modulus functionals.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace fpalg {

using Complex = std::complex<double>;

/// Finite Taylor coefficient vector a_0 ... a_N. Never empty; every entry is
/// finite. The zero series is stored as {0}.
class TruncatedSeries {
 public:
  TruncatedSeries();  // zero series
  explicit TruncatedSeries(std::vector<Complex> coeffs);
  TruncatedSeries(std::initializer_list<Complex> coeffs);

  static TruncatedSeries constant(Complex c);
  static TruncatedSeries monomial(std::size_t n, Complex c = 1.0);
  /// z - lambda
  static TruncatedSeries linear_factor(Complex lambda);

  std::size_t degree() const { return coeffs_.size() - 1; }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const Complex> coeffs() const { return coeffs_; }
  const Complex& operator[](std::size_t n) const { return coeffs_[n]; }

  bool is_zero() const;
  /// Sum of |a_n|; bounds |f| on the closed unit disk.
  double abs_sum() const;
  /// Sum of |a_n| r^n, the majorant series at radius r.
  double abs_sum(double r) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Complex> coeffs_;
};

/// A point of the open unit disk.
class DiskPoint {
 public:
  explicit DiskPoint(Complex value);
  Complex value() const { return value_; }
  double modulus() const { return std::abs(value_); }

 private:
  Complex value_;
};

/// Horner evaluation.
Complex eval(const TruncatedSeries& f, Complex z);

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries scale(const TruncatedSeries& f, Complex s);
/// Cauchy product. Degree deg f + deg g unless `trunc` caps it.
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g,
                    std::optional<std::size_t> trunc = std::nullopt);

/// Returns A with f(z) - f(lambda) = A(z) (z - lambda); deg A = deg f - 1,
/// and A = {0} for constant f.
TruncatedSeries synthetic_divide(const TruncatedSeries& f, DiskPoint lambda);

struct CircleOptions {
  /// Minimum number of equispaced samples; the effective count is the next
  /// power of two >= max(min_samples, 4 deg + 4).
  std::size_t min_samples = 256;
  int refine_iterations = 40;
  /// Number of best local maxima refined by golden-section search.
  std::size_t refine_candidates = 4;
};

/// Estimate of max_{|z|=r} |f(z)| (equal to the closed-disk maximum).
/// Never exceeds the true maximum by more than roundoff; underestimates by at
/// most max_modulus_sampling_bound().
double max_modulus(const TruncatedSeries& f, double r, const CircleOptions& opts = {});

/// Worst-case underestimate of max_modulus from the coarse sample grid alone:
/// L h / 2 with L = sum n |a_n| r^n (the theta-Lipschitz constant) and h the
/// sample spacing. Refinement only improves on it.
double max_modulus_sampling_bound(const TruncatedSeries& f, double r,
                                  const CircleOptions& opts = {});

struct MeanOptions {
  /// Relative tolerance on the p-th power mean.
  double rel_tol = 1e-12;
  std::size_t max_nodes = std::size_t{1} << 18;
};

/// M_p(r, f) = (circle mean of |f|^p)^{1/p}. Throws AccuracyError when the
/// trapezoid doubling does not settle within max_nodes.
double mean_modulus_p(const TruncatedSeries& f, double r, double p,
                      const MeanOptions& opts = {});

}  // namespace fpalg
