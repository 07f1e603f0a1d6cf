#pragma once

#include <cstdint>

#include <stirling/bracketed_value.hpp>
#include <stirling/identity_report.hpp>
#include <stirling/quadrature.hpp>

namespace stirling {

// Three independent routes to the constant C = ln(sqrt(2 pi)) - 1: a
// termwise-integrated series, the sawtooth tail integral, and direct
// quadrature of a combined integrand, plus the identities tying them
// together.

// C = ln(sqrt(2 pi)) - 1 = -0.0810614667953273...
double stirling_constant_closed();

// Continuous extension of 8x^2/(1 - 4x^2) - pi x tan(pi x) to [0, 1/2];
// the poles at x = 1/2 cancel and the limit value is -1/2. Integrates to C.
double combined_integrand(double x);

// The difference 8x^2/(1 - 4x^2) - (1/(1+2x) + 1/(1-2x) - 2) on [0, 1/2).
// Algebraically zero; measures only roundoff of the two evaluations.
double decomposition_residual(double x);

// Adaptive quadrature of the combined integrand over [0, 1/2].
// tol >= 1e-12.
QuadratureResult constant_via_quadrature(double tol);

// Termwise integral of the series route,
//
//     t_nu = 1 - (nu + 1/2) ln((nu + 1)/nu),   nu >= 1,
//
// each t_nu < 0 and increasing toward 0. Shares one closed form with
// sawtooth_unit_integral: t_nu = sawtooth_unit_integral(nu - 1) exactly.
double constant_series_term(std::int64_t nu);

// sum_{nu=1..n_terms} t_nu. n_terms >= 1.
double constant_series_partial(std::int64_t n_terms);

// Integral-test enclosure of the remaining tail sum_{nu > n_terms} t_nu.
// All terms are negative, so lower <= tail <= upper <= 0. n_terms >= 2.
BracketedValue constant_series_tail_bracket(std::int64_t n_terms);

// Checks the identity int_0^inf sawtooth = int_0^{1/2} combined integrand:
// lhs = sawtooth_integral(t_intervals) plus the tail-bracket midpoint, rhs
// = quadrature at tol. The report tolerance inflates tol by the bracket
// width and the quadrature error estimate. t_intervals >= 10.
IdentityReport sawtooth_quadrature_check(std::int64_t t_intervals, double tol);

// Integration-by-parts identity on [0, eps] for eps in (0, 1/2):
//
//     int_0^eps (1/(1-2x) - pi x tan(pi x)) dx
//       = (eps - 1/2) ln cos(pi eps) + 1/2 ln(cos(pi eps)/(1 - 2 eps))
//         - int_0^eps ln cos(pi x) dx.
//
// eps within 1e-6 of 1/2 is rejected (both logs blow up). tol >= 1e-12.
IdentityReport epsilon_identity_check(double eps, double tol);

}  // namespace stirling
