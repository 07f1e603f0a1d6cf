#pragma once

#include <stirling/identity_report.hpp>
#include <stirling/quadrature.hpp>

namespace stirling {

// Log-trigonometric integrals over [0, 1/2]. Both carry an integrable log
// singularity at one endpoint; a strip of width delta next to it is
// integrated in closed form plus a smooth log(sin(y)/y) remainder, and the
// rest goes to adaptive quadrature.

// int_0^{1/2} ln cos(pi x) dx = -ln(sqrt 2). tol >= 1e-10,
// delta in [1e-6, 0.1].
QuadratureResult log_cos_integral(double tol, double delta = 1e-3);

// int_0^{1/2} ln sin(pi x) dx, same value by the x -> 1/2 - x exchange.
QuadratureResult log_sin_integral(double tol, double delta = 1e-3);

// Double-angle consistency: int_0^{1/2} ln sin(2 pi x) dx (singular at both
// endpoints) against ln(sqrt 2) + 2 int_0^{1/2} ln sin(pi x) dx; both sides
// equal -ln(sqrt 2). tol >= 1e-8.
IdentityReport double_angle_check(double tol);

}  // namespace stirling
