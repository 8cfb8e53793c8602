#include "fpalg/ideals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fpalg {

Complex point_functional(const TruncatedSeries& f, DiskPoint lambda) {
  return eval(f, lambda.value());
}

Membership ideal_contains(const IdealHandle& ideal, const TruncatedSeries& f, double tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("ideal_contains: tol must be >= 0");
  const Complex v = point_functional(f, ideal.lambda());
  return {std::abs(v) <= tol, v};
}

TruncatedSeries Coset::reconstruct() const {
  const auto factor = TruncatedSeries::linear_factor(ideal.lambda().value());
  return add(mul(quotient, factor), TruncatedSeries::constant(representative));
}

Coset coset_of(const TruncatedSeries& f, const IdealHandle& ideal) {
  return {point_functional(f, ideal.lambda()), ideal, synthetic_divide(f, ideal.lambda())};
}

bool same_coset(const TruncatedSeries& f, const TruncatedSeries& g, const IdealHandle& ideal,
                double tol) {
  return std::abs(point_functional(f, ideal.lambda()) - point_functional(g, ideal.lambda())) <= tol;
}

QuotientBounds quotient_seminorm_bounds(const TruncatedSeries& f, const IdealHandle& ideal,
                                        double r, std::size_t k_budget) {
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("quotient_seminorm_bounds: r must lie in [0, 1)");
  const Complex lambda = ideal.lambda().value();
  const Complex value = eval(f, lambda);

  QuotientBounds out;
  out.lower = r >= std::abs(lambda) ? std::abs(value) : 0.0;
  out.upper = std::numeric_limits<double>::infinity();

  // Witness h_k = f(lambda) (z/lambda)^k - f lies in M_lambda, and f + h_k is
  // the monomial f(lambda) (z/lambda)^k. For r >= |lambda| the k >= 1 terms
  // only grow, so the constant witness is the minimum.
  const std::size_t k_last = (lambda == Complex{} || r >= std::abs(lambda)) ? 0 : k_budget;
  Complex coeff = value;
  for (std::size_t k = 0; k <= k_last; ++k) {
    if (k > 0) coeff /= lambda;
    if (!std::isfinite(coeff.real()) || !std::isfinite(coeff.imag())) break;
    const auto h = sub(TruncatedSeries::monomial(k, coeff), f);
    const double m = max_modulus(add(f, h), r);
    if (m < out.upper) {
      out.upper = m;
      out.witness_k = k;
    }
  }
  return out;
}

bool quotient_submultiplicativity_check(const TruncatedSeries& f, const TruncatedSeries& g,
                                        const IdealHandle& ideal, double r) {
  const DiskPoint lambda = ideal.lambda();
  if (r < lambda.modulus()) {
    throw std::invalid_argument("quotient_submultiplicativity_check: requires r >= |lambda|");
  }
  const double nf = std::abs(point_functional(f, lambda));
  const double ng = std::abs(point_functional(g, lambda));
  const double nfg = std::abs(point_functional(mul(f, g), lambda));
  return nfg <= nf * ng + 1e-12 * std::max(1.0, nf * ng);
}

Complex spectral_point(const TruncatedSeries& f, const IdealHandle& ideal) {
  return point_functional(f, ideal.lambda());
}

}  // namespace fpalg
