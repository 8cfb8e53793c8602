#pragma once

// Point evaluations gamma_lambda(f) = f(lambda), the closed maximal ideals
// M_lambda = { f : f(lambda) = 0 }, cosets of F^p / M_lambda (identified with
// the constant f(lambda)) and the quotient seminorms
//   ||[f]||_r = inf_{h in M_lambda} max_{|z| = r} |f + h|.

#include <cstddef>

#include "fpalg/series.hpp"

namespace fpalg {

class IdealHandle {
 public:
  explicit IdealHandle(DiskPoint lambda) : lambda_(lambda) {}
  DiskPoint lambda() const { return lambda_; }

 private:
  DiskPoint lambda_;
};

Complex point_functional(const TruncatedSeries& f, DiskPoint lambda);

struct Membership {
  bool contains = false;
  Complex value;  // f(lambda)
};

Membership ideal_contains(const IdealHandle& ideal, const TruncatedSeries& f, double tol);

/// f + M_lambda, carried by its constant representative f(lambda) together
/// with the certificate f = f(lambda) + quotient (z - lambda).
struct Coset {
  Complex representative;
  IdealHandle ideal;
  TruncatedSeries quotient;

  /// representative + quotient (z - lambda).
  TruncatedSeries reconstruct() const;
};

Coset coset_of(const TruncatedSeries& f, const IdealHandle& ideal);

/// Equal cosets iff equal values at lambda, up to tol.
bool same_coset(const TruncatedSeries& f, const TruncatedSeries& g, const IdealHandle& ideal,
                double tol);

struct QuotientBounds {
  double lower = 0.0;
  double upper = 0.0;
  std::size_t witness_k = 0;  // witness h = f(lambda)(z/lambda)^k - f attaining `upper`
};

/// Brackets ||[f]||_r with the witness family h_k = f(lambda)(z/lambda)^k - f,
/// 0 <= k <= k_budget (k >= 1 only for lambda != 0), and the maximum-principle
/// lower bound |f(lambda)| when r >= |lambda|.
QuotientBounds quotient_seminorm_bounds(const TruncatedSeries& f, const IdealHandle& ideal,
                                        double r, std::size_t k_budget = 64);

/// ||[fg]||_r <= ||[f]||_r ||[g]||_r with 1e-12 slack, in the regime r >= |lambda|.
bool quotient_submultiplicativity_check(const TruncatedSeries& f, const TruncatedSeries& g,
                                        const IdealHandle& ideal, double r);

/// The scalar lambda_f = f(lambda) with lambda_f - f in M_lambda, i.e. not
/// invertible in F^p / M_lambda.
Complex spectral_point(const TruncatedSeries& f, const IdealHandle& ideal);

}  // namespace fpalg
