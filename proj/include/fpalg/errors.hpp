#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fpalg {

/// Outcome of a numerical quadrature: value, estimated absolute error, and
/// the number of integrand evaluations (radial or circle nodes).
struct Quadrature {
  double value = 0.0;
  double residual = 0.0;
  std::size_t nodes = 0;
};

/// A quadrature that failed to reach its tolerance within the node budget.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double residual, std::size_t nodes)
      : std::runtime_error(what), residual_(residual), nodes_(nodes) {}

  double residual() const { return residual_; }
  std::size_t nodes() const { return nodes_; }

 private:
  double residual_;
  std::size_t nodes_;
};

}  // namespace fpalg
