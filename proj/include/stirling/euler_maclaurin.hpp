#pragma once

#include <cstdint>
#include <vector>

namespace stirling {

// Exact Euler-Maclaurin form of the log-factorial,
//
//     ln n! = n ln n - n + 1 + ln(sqrt n) + int_0^{n-1} (x - [x] - 1/2)/(1 + x) dx,
//
// ([x] = floor) together with the Stirling approximation it converges to.

struct ConvergenceRow {
  std::int64_t n = 0;
  double log_fact_direct = 0.0;
  double log_fact_em = 0.0;
  double stirling_ratio = 0.0;
  double em_residual = 0.0;  // log_fact_em - log_fact_direct
};

// sum_{k=1..n} ln k. n = 0 is the empty product. n > 1e6 throws BudgetError.
double log_factorial_direct(std::int64_t n);

// Closed form of the sawtooth integral over one unit strip,
//
//     int_nu^{nu+1} (x - [x] - 1/2)/(1 + x) dx = 1 - (nu + 3/2) ln((nu + 2)/(nu + 1)),
//
// for integer nu >= 0. Negative, increasing toward 0, |value| ~ 1/(12 nu^2).
double sawtooth_unit_integral(std::int64_t nu);

// int_0^T of the sawtooth integrand: the unit closed forms summed over
// nu = 0 .. T-1. T = 0 gives the empty integral.
double sawtooth_integral(std::int64_t t_intervals);

// The Euler-Maclaurin identity above, evaluated term by term. Agrees with
// log_factorial_direct to roundoff for every n, by construction rather than
// asymptotically. n >= 1.
double log_factorial_em(std::int64_t n);

// n ln n - n + ln(sqrt(2 pi n)).
double stirling_log_approx(std::int64_t n);

// n! / (n^n e^{-n} sqrt(2 pi n)), evaluated in the log domain. Decreases
// strictly to 1; n (ratio - 1) -> 1/12.
double stirling_ratio(std::int64_t n);

// Rows n = 1 .. n_max comparing the direct sum, the Euler-Maclaurin form,
// and the Stirling ratio. 1 <= n_max, and n_max > 1e4 throws BudgetError.
std::vector<ConvergenceRow> convergence_table(std::int64_t n_max);

}  // namespace stirling
