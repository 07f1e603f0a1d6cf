#include <stirling/verification.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include <stirling/constant_chain.hpp>
#include <stirling/euler_maclaurin.hpp>
#include <stirling/logcos.hpp>
#include <stirling/tangent_series.hpp>

namespace stirling {
namespace {

constexpr double kPi = std::numbers::pi;

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void validate(const VerificationConfig& config) {
  if (!(config.tol >= 1e-14)) {
    throw std::invalid_argument("verification: tol must be >= 1e-14");
  }
  if (config.series_n < 2 || config.series_n > 100'000'000) {
    throw std::invalid_argument(
        "verification: series_n must lie in [2, 1e8]");
  }
  if (config.sawtooth_t < 10 || config.sawtooth_t > 100'000'000) {
    throw std::invalid_argument(
        "verification: sawtooth_t must lie in [10, 1e8]");
  }
}

class SuiteBuilder {
 public:
  SuiteBuilder(VerificationSuiteReport& out, const SuiteFault& fault)
      : out_(out), fault_(fault) {}

  void add(const std::string& name, double lhs, double rhs, double tolerance) {
    if (!fault_.check_name.empty() && fault_.check_name == name) {
      lhs += fault_.lhs_nudge;
    }
    out_.reports.push_back(make_identity_report(name, lhs, rhs, tolerance));
  }

  void add(IdentityReport report) {
    add(report.name, report.lhs, report.rhs, report.tolerance);
  }

 private:
  VerificationSuiteReport& out_;
  const SuiteFault& fault_;
};

}  // namespace

VerificationSuiteReport run_verification_suite(const VerificationConfig& config,
                                               const SuiteFault& fault) {
  validate(config);
  VerificationSuiteReport out;
  out.config = config;
  out.generated_at = utc_timestamp();
  SuiteBuilder suite(out, fault);

  const double grid[] = {0.0,  0.05, 0.10, 0.15, 0.20,
                         0.25, 0.30, 0.35, 0.40, 0.45};

  // Pole-cancelling decomposition is exact algebra; only roundoff remains.
  {
    double worst = 0.0;
    for (double x : grid) worst = std::max(worst, std::abs(decomposition_residual(x)));
    worst = std::max(worst, std::abs(decomposition_residual(0.499)));
    suite.add("decomposition_residual_max", worst, 0.0, 1e-9);
  }

  // Partial sum plus tail bracket must enclose the platform tangent.
  {
    double violation = 0.0;
    for (double x : grid) {
      for (std::int64_t n : {10, 100, 1000, 10000}) {
        const double partial = tan_pf_partial(x, n);
        const BracketedValue tail = tan_pf_tail_bracket(x, n);
        const double truth = kPi * std::tan(kPi * x);
        violation = std::max(violation, (partial + tail.lower) - truth);
        violation = std::max(violation, truth - (partial + tail.upper));
      }
    }
    suite.add("tangent_enclosure_grid", std::max(violation, 0.0), 0.0, 1e-12);
  }

  {
    double widest = 0.0;
    for (double x : grid) {
      widest = std::max(widest, tan_pf_tail_bracket(x, 100'000).width());
    }
    suite.add("tangent_bracket_width_100000", widest, 0.0, 1e-9);
  }

  // The Euler-Maclaurin form is an identity, not an asymptotic series.
  {
    double worst = 0.0;
    for (std::int64_t n = 1; n <= 200; ++n) {
      const double direct = log_factorial_direct(n);
      const double rel = std::abs(log_factorial_em(n) - direct) /
                         std::max(1.0, std::abs(direct));
      worst = std::max(worst, rel);
    }
    suite.add("em_identity_sweep", worst, 0.0, 1e-11);
  }

  suite.add(sawtooth_quadrature_check(config.sawtooth_t,
                                      std::max(config.tol, 1e-12)));

  // Three routes to the constant, against the closed form and one another.
  {
    const double closed = stirling_constant_closed();
    const double quad = constant_via_quadrature(1e-10).value;
    const double series =
        constant_series_partial(config.series_n) +
        constant_series_tail_bracket(config.series_n).midpoint();
    const double sawtooth =
        sawtooth_integral(config.sawtooth_t) +
        constant_series_tail_bracket(config.sawtooth_t).midpoint();
    suite.add("route_quadrature_vs_closed", quad, closed, config.tol);
    suite.add("route_series_vs_closed", series, closed, config.tol);
    suite.add("route_sawtooth_vs_closed", sawtooth, closed, config.tol);
    suite.add("route_series_vs_quadrature", series, quad, config.tol);
    suite.add("route_sawtooth_vs_quadrature", sawtooth, quad, config.tol);
    suite.add("route_sawtooth_vs_series", sawtooth, series, config.tol);
  }

  {
    const double tol_log = std::clamp(config.tol, 1e-10, 1e-8);
    const QuadratureResult cos_int = log_cos_integral(tol_log);
    const QuadratureResult sin_int = log_sin_integral(tol_log);
    suite.add("log_cos_value", cos_int.value, -0.5 * std::log(2.0),
              2.0 * tol_log);
    suite.add("sin_cos_exchange", sin_int.value, cos_int.value, 2.0 * tol_log);
  }

  suite.add(double_angle_check(std::max(config.tol, 1e-8)));

  for (double eps : {0.1, 0.25, 0.4}) {
    suite.add(epsilon_identity_check(eps, std::max(config.tol, 1e-8)));
  }

  out.overall_pass = std::all_of(out.reports.begin(), out.reports.end(),
                                 [](const IdentityReport& r) { return r.pass; });
  return out;
}

int exit_code_for(const VerificationSuiteReport& report) {
  return report.overall_pass ? 0 : 1;
}

std::string to_suite_json(const VerificationSuiteReport& report) {
  nlohmann::ordered_json j;
  j["reports"] = nlohmann::ordered_json::array();
  for (const IdentityReport& r : report.reports) {
    j["reports"].push_back({{"name", r.name},
                            {"lhs", r.lhs},
                            {"rhs", r.rhs},
                            {"abs_diff", r.abs_diff},
                            {"tolerance", r.tolerance},
                            {"pass", r.pass}});
  }
  j["generated_at"] = report.generated_at;
  j["overall_pass"] = report.overall_pass;
  j["config"] = {{"tol", report.config.tol},
                 {"series_n", report.config.series_n},
                 {"sawtooth_t", report.config.sawtooth_t}};
  return j.dump(2) + "\n";
}

std::string format_suite_table(const VerificationSuiteReport& report) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-30s %-24s %-24s %-10s %-10s %s\n",
                "check", "lhs", "rhs", "|diff|", "tol", "status");
  out += line;
  for (const IdentityReport& r : report.reports) {
    char lhs[32], rhs[32];
    std::snprintf(lhs, sizeof lhs, "%.17g", r.lhs);
    std::snprintf(rhs, sizeof rhs, "%.17g", r.rhs);
    std::snprintf(line, sizeof line, "%-30s %-24s %-24s %-10.2e %-10.2e %s\n",
                  r.name.c_str(), lhs, rhs, r.abs_diff, r.tolerance,
                  r.pass ? "pass" : "FAIL");
    out += line;
  }
  std::size_t passed = 0;
  for (const IdentityReport& r : report.reports) passed += r.pass ? 1 : 0;
  std::snprintf(line, sizeof line, "overall: %s (%zu/%zu)\n",
                report.overall_pass ? "PASS" : "FAIL", passed,
                report.reports.size());
  out += line;
  return out;
}

}  // namespace stirling
