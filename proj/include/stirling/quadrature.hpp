#pragma once

#include <cstdint>
#include <functional>

namespace stirling {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::int64_t evaluations = 0;
  bool converged = false;  // implies error_estimate <= requested tol
};

struct IntegrateOptions {
  std::int64_t max_evaluations = 1'000'000;
};

// Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b] to absolute
// tolerance tol. The subinterval with the largest |K15 - G7| estimate is
// bisected first, ties going to the leftmost. Requires a < b and
// tol >= 1e-14 (tighter is unattainable in binary64); throws
// std::invalid_argument otherwise, EvaluationError if f returns a
// non-finite value. Exhausting the evaluation budget is not an error: the
// partial result comes back with converged = false.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double tol,
                           const IntegrateOptions& options = {});

}  // namespace stirling
