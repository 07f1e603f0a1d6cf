#include <stirling/euler_maclaurin.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <stirling/errors.hpp>
#include <stirling/summation.hpp>

namespace stirling {
namespace {

constexpr std::int64_t kMaxFactorialN = 1'000'000;
constexpr std::int64_t kMaxTableN = 10'000;

// 1 - (m + 1/2) ln(1 + 1/m) for m >= 1: the one closed form shared by the
// unit sawtooth strip (m = nu + 1) and the series term (m = nu), so the
// index-shift identity between them holds bitwise.
double one_minus_half_log(double m) {
  return 1.0 - (m + 0.5) * std::log1p(1.0 / m);
}

double stirling_ratio_from(double log_fact, std::int64_t n) {
  return std::exp(log_fact - stirling_log_approx(n));
}

}  // namespace

double log_factorial_direct(std::int64_t n) {
  if (n < 0) {
    throw std::invalid_argument("log_factorial_direct: n must be >= 0");
  }
  if (n > kMaxFactorialN) {
    throw BudgetError("log_factorial_direct: n above 1e6");
  }
  return sum_terms(n, [](std::int64_t i) {
    return std::log(static_cast<double>(i + 1));
  });
}

double sawtooth_unit_integral(std::int64_t nu) {
  if (nu < 0) {
    throw std::invalid_argument("sawtooth_unit_integral: nu must be >= 0");
  }
  return one_minus_half_log(static_cast<double>(nu) + 1.0);
}

double sawtooth_integral(std::int64_t t_intervals) {
  if (t_intervals < 0) {
    throw std::invalid_argument("sawtooth_integral: t_intervals must be >= 0");
  }
  return sum_terms(t_intervals, [](std::int64_t i) {
    return one_minus_half_log(static_cast<double>(i) + 1.0);
  });
}

double log_factorial_em(std::int64_t n) {
  if (n < 1) {
    throw std::invalid_argument("log_factorial_em: n must be >= 1");
  }
  const double dn = static_cast<double>(n);
  return dn * std::log(dn) - dn + 1.0 + 0.5 * std::log(dn) +
         sawtooth_integral(n - 1);
}

double stirling_log_approx(std::int64_t n) {
  if (n < 1) {
    throw std::invalid_argument("stirling_log_approx: n must be >= 1");
  }
  const double dn = static_cast<double>(n);
  return dn * std::log(dn) - dn +
         0.5 * std::log(2.0 * std::numbers::pi * dn);
}

double stirling_ratio(std::int64_t n) {
  return stirling_ratio_from(log_factorial_direct(n), n);
}

std::vector<ConvergenceRow> convergence_table(std::int64_t n_max) {
  if (n_max < 1) {
    throw std::invalid_argument("convergence_table: n_max must be >= 1");
  }
  if (n_max > kMaxTableN) {
    throw BudgetError("convergence_table: n_max above 1e4");
  }
  std::vector<ConvergenceRow> rows(static_cast<std::size_t>(n_max));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const double direct = log_factorial_direct(n);
    ConvergenceRow& row = rows[static_cast<std::size_t>(n - 1)];
    row.n = n;
    row.log_fact_direct = direct;
    row.log_fact_em = log_factorial_em(n);
    row.stirling_ratio = stirling_ratio_from(direct, n);
    row.em_residual = row.log_fact_em - direct;
  }
  return rows;
}

}  // namespace stirling
