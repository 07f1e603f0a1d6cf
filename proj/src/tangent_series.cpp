#include <stirling/tangent_series.hpp>

#include <cmath>
#include <stdexcept>

#include <stirling/errors.hpp>
#include <stirling/summation.hpp>

namespace stirling {
namespace {

constexpr std::int64_t kMaxTerms = 100'000'000;

void check_domain(double x) {
  if (x == 0.5) {
    throw std::domain_error(
        "tangent series: x = 1/2 is the pole of the nu = 0 term");
  }
  if (!(x >= 0.0 && x < 0.5)) {
    throw std::domain_error("tangent series: x must lie in [0, 1/2)");
  }
}

}  // namespace

double tan_pf_partial(double x, std::int64_t n_terms) {
  check_domain(x);
  if (n_terms < 1) {
    throw std::invalid_argument("tan_pf_partial: n_terms must be >= 1");
  }
  return sum_terms(n_terms, [x](std::int64_t i) {
    const double c = static_cast<double>(i) + 0.5;
    return 2.0 * x / (c * c - x * x);
  });
}

BracketedValue tan_pf_tail_bracket(double x, std::int64_t n_terms) {
  check_domain(x);
  if (n_terms < 2) {
    throw std::invalid_argument("tan_pf_tail_bracket: n_terms must be >= 2");
  }
  // The summand 2x/((nu+1/2)^2 - x^2) decreases in nu, and its antiderivative
  // in nu is ln((nu+1/2+x)/(nu+1/2-x)), so the integral test gives both sides.
  const double n = static_cast<double>(n_terms);
  const double lower = std::log((n + 0.5 + x) / (n + 0.5 - x));
  const double upper = std::log((n - 0.5 + x) / (n - 0.5 - x));
  return {lower, upper};
}

BracketedValue pi_tan_pi(double x, double tol) {
  check_domain(x);
  if (!(tol > 0.0)) {
    throw std::invalid_argument("pi_tan_pi: tol must be positive");
  }
  // Bracket width is below 2x/(N - 1/2)^2; start from the N that bound
  // suggests and double until the actual width fits.
  std::int64_t n = 2;
  if (x > 0.0) {
    const double suggested = 0.5 + std::sqrt(2.0 * x / tol);
    if (suggested > static_cast<double>(kMaxTerms)) {
      throw BudgetError("pi_tan_pi: tolerance needs more than 1e8 terms");
    }
    n = std::max<std::int64_t>(2, static_cast<std::int64_t>(suggested) + 1);
  }
  BracketedValue tail = tan_pf_tail_bracket(x, n);
  while (tail.width() > tol) {
    if (n > kMaxTerms / 2) {
      throw BudgetError("pi_tan_pi: tolerance needs more than 1e8 terms");
    }
    n *= 2;
    tail = tan_pf_tail_bracket(x, n);
  }
  const double partial = tan_pf_partial(x, n);
  return {partial + tail.lower, partial + tail.upper};
}

}  // namespace stirling
