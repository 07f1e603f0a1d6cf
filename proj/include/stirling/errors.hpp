#pragma once

#include <stdexcept>
#include <string>

namespace stirling {

// A work limit (evaluation budget, series length cap) would be exceeded.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// An integrand produced NaN or infinity; carries the offending abscissa.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double abscissa)
      : std::runtime_error(what), abscissa_(abscissa) {}

  double abscissa() const { return abscissa_; }

 private:
  double abscissa_;
};

}  // namespace stirling
