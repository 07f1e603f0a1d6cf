#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <stirling/errors.hpp>
#include <stirling/tangent_series.hpp>

#include "oracles.hpp"

using stirling::BracketedValue;
using stirling::BudgetError;
using stirling::pi_tan_pi;
using stirling::tan_pf_partial;
using stirling::tan_pf_tail_bracket;

namespace {

constexpr double kPi = std::numbers::pi;

const double kGrid[] = {0.0,  0.05, 0.10, 0.15, 0.20,
                        0.25, 0.30, 0.35, 0.40, 0.45};

}  // namespace

TEST_CASE("partial sums at pinned points") {
  CHECK(tan_pf_partial(0.0, 100) == 0.0);
  // Single nu = 0 term at x = 0.45: 0.9 / (0.25 - 0.2025) = 18/0.95...
  CHECK(tan_pf_partial(0.45, 1) ==
        doctest::Approx(18.947368421052632).epsilon(1e-15));
  // 100 terms, high-precision reference
  CHECK(tan_pf_partial(0.45, 100) ==
        doctest::Approx(19.826235389344219).epsilon(1e-13));
}

TEST_CASE("partial sums are nondecreasing in the term count") {
  for (double x : kGrid) {
    double prev = tan_pf_partial(x, 10);
    for (std::int64_t n : {100, 1000, 10000}) {
      const double next = tan_pf_partial(x, n);
      CHECK(next >= prev);
      prev = next;
    }
  }
  // adjacent counts: the difference is exactly one nonnegative term
  CHECK(tan_pf_partial(0.3, 501) >= tan_pf_partial(0.3, 500));
}

TEST_CASE("tail bracket at pinned point x = 1/4, N = 10") {
  const BracketedValue tail = tan_pf_tail_bracket(0.25, 10);
  CHECK(tail.lower == doctest::Approx(0.047628048989254620).epsilon(1e-14));
  CHECK(tail.upper == doctest::Approx(0.052643733485421983).epsilon(1e-14));

  // Brute-force tail: terms nu = 10..1e7 in long double; what remains above
  // 1e7 is ~5e-8, far inside the 2.5e-3 margins.
  const double brute = oracles::long_double_sum(10'000'000 - 10, [](std::int64_t i) {
    const double c = static_cast<double>(i + 10) + 0.5;
    return 2.0 * 0.25 / (c * c - 0.25 * 0.25);
  });
  CHECK(tail.lower <= brute);
  CHECK(brute <= tail.upper);
}

TEST_CASE("enclosure of the platform tangent on a grid") {
  for (double x : kGrid) {
    const double truth = kPi * std::tan(kPi * x);
    for (std::int64_t n : {10, 100, 1000, 10000}) {
      const double partial = tan_pf_partial(x, n);
      const BracketedValue tail = tan_pf_tail_bracket(x, n);
      CHECK(partial + tail.lower <= truth);
      CHECK(truth <= partial + tail.upper);
    }
  }
}

TEST_CASE("bracket width shrinks like 2x/(N - 1/2)^2") {
  for (double x : kGrid) {
    for (std::int64_t n : {10, 100, 1000, 10000, 100000}) {
      const BracketedValue tail = tan_pf_tail_bracket(x, n);
      CHECK(tail.width() >= 0.0);
      const double half = static_cast<double>(n) - 0.5;
      CHECK(tail.width() <= 2.0 * x / (half * half) + 1e-18);
    }
  }
}

TEST_CASE("pi_tan_pi encloses pi tan(pi x) within the requested width") {
  const BracketedValue at_zero = pi_tan_pi(0.0, 1e-10);
  CHECK(at_zero.contains(0.0));
  CHECK(at_zero.width() <= 1e-10);

  const BracketedValue quarter = pi_tan_pi(0.25, 1e-9);
  CHECK(quarter.width() <= 1e-9);
  CHECK(quarter.contains(kPi));  // tan(pi/4) = 1

  const BracketedValue tenth = pi_tan_pi(0.1, 1e-10);
  CHECK(tenth.width() <= 1e-10);
  CHECK(tenth.contains(1.0207653306919257));
  CHECK(tenth.contains(kPi * std::tan(kPi * 0.1)));

  const BracketedValue steep = pi_tan_pi(0.45, 1e-8);
  CHECK(steep.width() <= 1e-8);
  CHECK(steep.contains(19.835235375094545));
}

TEST_CASE("domain and budget errors") {
  CHECK_THROWS_AS(tan_pf_partial(0.5, 10), std::domain_error);
  CHECK_THROWS_AS(tan_pf_partial(-0.01, 10), std::domain_error);
  CHECK_THROWS_AS(tan_pf_partial(0.6, 10), std::domain_error);
  CHECK_THROWS_AS(tan_pf_partial(std::nan(""), 10), std::domain_error);
  CHECK_THROWS_AS(tan_pf_partial(0.25, 0), std::invalid_argument);
  CHECK_THROWS_AS(tan_pf_tail_bracket(0.25, 1), std::invalid_argument);
  CHECK_THROWS_AS(pi_tan_pi(0.5, 1e-8), std::domain_error);
  CHECK_THROWS_AS(pi_tan_pi(0.25, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(pi_tan_pi(0.25, -1e-9), std::invalid_argument);
  // width <= tol would need N > 1e8 terms
  CHECK_THROWS_AS(pi_tan_pi(0.49, 2e-17), BudgetError);
}
