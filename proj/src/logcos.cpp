#include <stirling/logcos.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stirling {
namespace {

constexpr double kPi = std::numbers::pi;

// ln(sin(y)/y), stable through y = 0.
double log_sinc(double y) {
  if (y < 1e-3) {
    const double y2 = y * y;
    return -y2 * (1.0 / 6.0 + y2 * (1.0 / 180.0 + y2 * (1.0 / 2835.0)));
  }
  return std::log(std::sin(y) / y);
}

// int_0^delta ln sin(s t) dt with the log singularity split off exactly:
// ln sin(s t) = ln(s t) + ln(sin(s t)/(s t)), and the first piece integrates
// to delta (ln(s delta) - 1). Returns the closed piece plus a quadrature of
// the smooth remainder.
QuadratureResult singular_strip(double scale, double delta, double tol) {
  QuadratureResult rem = integrate(
      [scale](double t) { return log_sinc(scale * t); }, 0.0, delta, tol);
  rem.value += delta * (std::log(scale * delta) - 1.0);
  return rem;
}

void check_split(double tol, double delta) {
  if (!(tol >= 1e-10)) {
    throw std::invalid_argument("log integral: tol must be >= 1e-10");
  }
  if (!(delta >= 1e-6 && delta <= 0.1)) {
    throw std::invalid_argument("log integral: delta must lie in [1e-6, 0.1]");
  }
}

QuadratureResult combine(const QuadratureResult& strip,
                         const QuadratureResult& smooth, double tol) {
  QuadratureResult total;
  total.value = strip.value + smooth.value;
  total.error_estimate = strip.error_estimate + smooth.error_estimate;
  total.evaluations = strip.evaluations + smooth.evaluations;
  total.converged = total.error_estimate <= tol;
  return total;
}

}  // namespace

QuadratureResult log_cos_integral(double tol, double delta) {
  check_split(tol, delta);
  // cos(pi x) = sin(pi (1/2 - x)) puts the singularity at x = 1/2; the
  // strip [1/2 - delta, 1/2] maps to singular_strip by t = 1/2 - x.
  const QuadratureResult strip = singular_strip(kPi, delta, 0.5 * tol);
  const QuadratureResult smooth =
      integrate([](double x) { return std::log(std::cos(kPi * x)); }, 0.0,
                0.5 - delta, 0.5 * tol);
  return combine(strip, smooth, tol);
}

QuadratureResult log_sin_integral(double tol, double delta) {
  check_split(tol, delta);
  const QuadratureResult strip = singular_strip(kPi, delta, 0.5 * tol);
  const QuadratureResult smooth =
      integrate([](double x) { return std::log(std::sin(kPi * x)); }, delta,
                0.5, 0.5 * tol);
  return combine(strip, smooth, tol);
}

IdentityReport double_angle_check(double tol) {
  if (!(tol >= 1e-8)) {
    throw std::invalid_argument("double_angle_check: tol must be >= 1e-8");
  }
  const double inner = std::max(tol / 10.0, 1e-10);
  constexpr double delta = 1e-3;

  // lhs: int_0^{1/2} ln sin(2 pi x) dx. Singular at both endpoints; by
  // sin(2 pi (1/2 - t)) = sin(2 pi t) the two end strips are equal, so the
  // left one is computed and counted twice.
  const QuadratureResult strip = singular_strip(2.0 * kPi, delta, inner);
  const QuadratureResult mid =
      integrate([](double x) { return std::log(std::sin(2.0 * kPi * x)); },
                delta, 0.5 - delta, inner);
  const double lhs = 2.0 * strip.value + mid.value;

  // rhs: ln(sqrt 2) + 2 int_0^{1/2} ln sin(pi x) dx, from splitting
  // sin(2 pi x) = 2 sin(pi x) cos(pi x) and exchanging cos for sin.
  const double rhs =
      0.5 * std::log(2.0) + 2.0 * log_sin_integral(inner).value;

  return make_identity_report("double_angle", lhs, rhs, tol);
}

}  // namespace stirling
