#pragma once

#include <cstdint>

#include <stirling/bracketed_value.hpp>

namespace stirling {

// Partial-fraction series for the tangent on [0, 1/2):
//
//     pi tan(pi x) = sum_{nu >= 0} 2x / ((nu + 1/2)^2 - x^2),
//
// summed with rigorous two-sided tail enclosures. x = 1/2 is the pole of
// the nu = 0 term and is rejected as a domain error.

// Sum of the first n_terms terms (nu = 0 .. n_terms-1). n_terms >= 1.
double tan_pf_partial(double x, std::int64_t n_terms);

// Integral-test enclosure of the tail sum_{nu >= n_terms}. The summand is
// decreasing in nu, so
//
//     ln((N + 1/2 + x)/(N + 1/2 - x)) <= tail <= ln((N - 1/2 + x)/(N - 1/2 - x)).
//
// Requires n_terms >= 2 so the upper-bound logarithm stays finite.
BracketedValue tan_pf_tail_bracket(double x, std::int64_t n_terms);

// Enclosure of pi tan(pi x): partial sum plus tail bracket, with the term
// count chosen so the bracket width is at most tol. Throws BudgetError when
// that would need more than 1e8 terms.
BracketedValue pi_tan_pi(double x, double tol);

}  // namespace stirling
