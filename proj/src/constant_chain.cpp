#include <stirling/constant_chain.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include <stirling/euler_maclaurin.hpp>
#include <stirling/summation.hpp>

namespace stirling {
namespace {

constexpr double kPi = std::numbers::pi;

// Width of the strip next to x = 1/2 where the combined integrand switches
// from direct evaluation to the pole-cancelled series form.
constexpr double kSeam = 0.5 - 1e-3;

void check_unit_domain(double x, bool half_open, const char* who) {
  if (half_open && x == 0.5) {
    char msg[96];
    std::snprintf(msg, sizeof msg, "%s: pole at x = 1/2", who);
    throw std::domain_error(msg);
  }
  const double hi = half_open ? 0.5 : std::nextafter(0.5, 1.0);
  if (!(x >= 0.0 && x < hi)) {
    char msg[96];
    std::snprintf(msg, sizeof msg, "%s: x must lie in [0, 1/2%s", who,
                  half_open ? ")" : "]");
    throw std::domain_error(msg);
  }
}

// int_s^inf ((t + 1/2) ln(1 + 1/t) - 1) dt = 1/4 - (s(s+1)/2 ln(1+1/s) - s/2).
double series_tail_integral(double s) {
  return 0.25 - (0.5 * s * (s + 1.0) * std::log1p(1.0 / s) - 0.5 * s);
}

}  // namespace

double stirling_constant_closed() {
  return 0.5 * std::log(2.0 * kPi) - 1.0;
}

double combined_integrand(double x) {
  check_unit_domain(x, /*half_open=*/false, "combined_integrand");
  if (x <= kSeam) {
    // 8x^2/(1-4x^2) expanded as 1/(1+2x) + 1/(1-2x) - 2: each piece stays
    // O(1/delta) near the pole instead of O(1/delta^2), so the cancellation
    // against the tangent costs only absolute error ~1e-13 at the seam.
    const double rational = 1.0 / (1.0 + 2.0 * x) + 1.0 / (1.0 - 2.0 * x) - 2.0;
    return rational - kPi * x * std::tan(kPi * x);
  }
  // Within the seam strip the two simple poles at x = 1/2 cancel exactly:
  // with w = pi(1/2 - x), tan(pi x) = cot w and 1/(1 - 2x) = pi/(2w), so
  //     1/(1-2x) - pi x tan(pi x) = pi x (1/w - cot w) + (pi/w)(1/2 - x)
  // where the last term is exactly 1 and
  //     1/w - cot w = w/3 + w^3/45 + 2 w^5/945 + ...
  // Folding in the 1/(1+2x) - 2 rest of the decomposition:
  //     F(x) = 1/(1+2x) - 1 + pi x (w/3 + w^3/45 + 2 w^5/945).
  // Truncation < 1e-21 for w <= pi/1000.
  const double w = kPi * (0.5 - x);
  const double w2 = w * w;
  const double cot_defect = w * (1.0 / 3.0 + w2 * (1.0 / 45.0 + w2 * (2.0 / 945.0)));
  return 1.0 / (1.0 + 2.0 * x) - 1.0 + kPi * x * cot_defect;
}

double decomposition_residual(double x) {
  check_unit_domain(x, /*half_open=*/true, "decomposition_residual");
  const double pooled = 8.0 * x * x / (1.0 - 4.0 * x * x);
  const double split = 1.0 / (1.0 + 2.0 * x) + 1.0 / (1.0 - 2.0 * x) - 2.0;
  return pooled - split;
}

QuadratureResult constant_via_quadrature(double tol) {
  if (!(tol >= 1e-12)) {
    throw std::invalid_argument("constant_via_quadrature: tol must be >= 1e-12");
  }
  return integrate([](double x) { return combined_integrand(x); }, 0.0, 0.5,
                   tol);
}

double constant_series_term(std::int64_t nu) {
  if (nu < 1) {
    throw std::invalid_argument("constant_series_term: nu must be >= 1");
  }
  return sawtooth_unit_integral(nu - 1);
}

double constant_series_partial(std::int64_t n_terms) {
  if (n_terms < 1) {
    throw std::invalid_argument("constant_series_partial: n_terms must be >= 1");
  }
  return sum_terms(n_terms,
                   [](std::int64_t i) { return constant_series_term(i + 1); });
}

BracketedValue constant_series_tail_bracket(std::int64_t n_terms) {
  if (n_terms < 2) {
    throw std::invalid_argument(
        "constant_series_tail_bracket: n_terms must be >= 2");
  }
  // -t_nu = (nu + 1/2) ln(1 + 1/nu) - 1 is positive and decreasing, so the
  // integral test encloses the tail between the integrals from N and N + 1.
  // The pad absorbs the closed form's own roundoff, which grows like
  // (N + 2) ulps through the s(s+1)/2 factor.
  const double n = static_cast<double>(n_terms);
  const double pad = 4e-16 * (n + 2.0);
  const double lower = -(series_tail_integral(n) + pad);
  const double upper = std::min(0.0, -(series_tail_integral(n + 1.0) - pad));
  return {lower, upper};
}

IdentityReport sawtooth_quadrature_check(std::int64_t t_intervals, double tol) {
  if (t_intervals < 10) {
    throw std::invalid_argument(
        "sawtooth_quadrature_check: t_intervals must be >= 10");
  }
  const BracketedValue tail = constant_series_tail_bracket(t_intervals);
  const double lhs = sawtooth_integral(t_intervals) + tail.midpoint();
  const QuadratureResult quad = constant_via_quadrature(tol);
  const double tolerance = tol + tail.width() + quad.error_estimate;
  return make_identity_report("sawtooth_vs_quadrature", lhs, quad.value,
                              tolerance);
}

IdentityReport epsilon_identity_check(double eps, double tol) {
  if (!(eps > 0.0 && eps < 0.5)) {
    throw std::domain_error("epsilon_identity_check: eps must lie in (0, 1/2)");
  }
  if (eps > 0.5 - 1e-6) {
    throw std::domain_error(
        "epsilon_identity_check: eps within 1e-6 of 1/2, both logs diverge");
  }
  if (!(tol >= 1e-12)) {
    throw std::invalid_argument("epsilon_identity_check: tol must be >= 1e-12");
  }
  const double inner = std::max(tol / 10.0, 1e-13);
  const double lhs =
      integrate(
          [](double x) {
            return 1.0 / (1.0 - 2.0 * x) - kPi * x * std::tan(kPi * x);
          },
          0.0, eps, inner)
          .value;
  const double cos_pe = std::cos(kPi * eps);
  const double rhs =
      (eps - 0.5) * std::log(cos_pe) +
      0.5 * std::log(cos_pe / (1.0 - 2.0 * eps)) -
      integrate([](double x) { return std::log(std::cos(kPi * x)); }, 0.0, eps,
                inner)
          .value;
  char name[48];
  std::snprintf(name, sizeof name, "epsilon_identity(%g)", eps);
  return make_identity_report(name, lhs, rhs, tol);
}

}  // namespace stirling
