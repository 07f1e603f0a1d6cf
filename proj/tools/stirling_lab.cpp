#include <cinttypes>
#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <stirling/constant_chain.hpp>
#include <stirling/errors.hpp>
#include <stirling/euler_maclaurin.hpp>
#include <stirling/verification.hpp>

namespace {

int cmd_verify(double tol, std::int64_t series_n, std::int64_t sawtooth_t,
               bool as_json) {
  stirling::VerificationConfig config;
  config.tol = tol;
  config.series_n = series_n;
  config.sawtooth_t = sawtooth_t;
  const stirling::VerificationSuiteReport report =
      stirling::run_verification_suite(config);
  std::fputs(as_json ? stirling::to_suite_json(report).c_str()
                     : stirling::format_suite_table(report).c_str(),
             stdout);
  return stirling::exit_code_for(report);
}

int cmd_constant(const std::string& method, std::int64_t n, double tol) {
  const double closed = stirling::stirling_constant_closed();
  std::printf("method: %s\n", method.c_str());
  if (method == "quadrature") {
    const stirling::QuadratureResult r = stirling::constant_via_quadrature(tol);
    std::printf("tol: %.17g\n", tol);
    std::printf("value: %.17g\n", r.value);
    std::printf("error_estimate: %.17g\n", r.error_estimate);
    std::printf("evaluations: %" PRId64 "\n", r.evaluations);
    std::printf("converged: %s\n", r.converged ? "true" : "false");
    std::printf("closed_form: %.17g\n", closed);
    std::printf("abs_error: %.17g\n", std::abs(r.value - closed));
    return 0;
  }
  const double partial = method == "series"
                             ? stirling::constant_series_partial(n)
                             : stirling::sawtooth_integral(n);
  const stirling::BracketedValue tail =
      stirling::constant_series_tail_bracket(n);
  const double approx = partial + tail.midpoint();
  std::printf("n: %" PRId64 "\n", n);
  std::printf("partial: %.17g\n", partial);
  std::printf("partial_abs_error: %.17g\n", std::abs(partial - closed));
  std::printf("tail_midpoint: %.17g\n", tail.midpoint());
  std::printf("approximation: %.17g\n", approx);
  std::printf("closed_form: %.17g\n", closed);
  std::printf("abs_error: %.17g\n", std::abs(approx - closed));
  return 0;
}

int cmd_ratio(std::int64_t max_n, const std::string& format) {
  const auto rows = stirling::convergence_table(max_n);
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const stirling::ConvergenceRow& row : rows) {
      arr.push_back({{"n", row.n},
                     {"log_fact_direct", row.log_fact_direct},
                     {"log_fact_em", row.log_fact_em},
                     {"stirling_ratio", row.stirling_ratio},
                     {"em_residual", row.em_residual}});
    }
    std::printf("%s\n", arr.dump(2).c_str());
    return 0;
  }
  std::printf("n,log_fact_direct,log_fact_em,stirling_ratio,em_residual\n");
  for (const stirling::ConvergenceRow& row : rows) {
    std::printf("%" PRId64 ",%.17g,%.17g,%.17g,%.17g\n", row.n,
                row.log_fact_direct, row.log_fact_em, row.stirling_ratio,
                row.em_residual);
  }
  return 0;
}

int cmd_integrand(std::int64_t samples) {
  std::printf("x,F\n");
  for (std::int64_t i = 0; i < samples; ++i) {
    const double x = 0.5 * (static_cast<double>(i) /
                            static_cast<double>(samples - 1));
    std::printf("%.17g,%.17g\n", x, stirling::combined_integrand(x));
  }
  return 0;
}

int usage_error(const std::string& message) {
  std::fprintf(stderr, "stirling-lab: %s\n", message.c_str());
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Cross-checks for the identity chain behind Stirling's formula"};
  app.require_subcommand(1);

  double verify_tol = 1e-8;
  std::int64_t series_n = 100'000;
  std::int64_t sawtooth_t = 10'000;
  bool as_json = false;
  CLI::App* verify =
      app.add_subcommand("verify", "Run the full verification suite");
  verify->add_option("--tol", verify_tol, "Agreement tolerance")
      ->capture_default_str();
  verify->add_option("--series-n", series_n, "Series partial-sum length")
      ->capture_default_str();
  verify->add_option("--sawtooth-t", sawtooth_t, "Sawtooth integral length")
      ->capture_default_str();
  verify->add_flag("--json", as_json, "Emit the report as JSON");

  std::string method;
  std::int64_t constant_n = 100'000;
  double constant_tol = 1e-10;
  CLI::App* constant = app.add_subcommand(
      "constant", "Approximate the Stirling constant by one route");
  constant->add_option("--method", method, "series, sawtooth, or quadrature")
      ->required()
      ->check(CLI::IsMember({"series", "sawtooth", "quadrature"}));
  constant->add_option("--n", constant_n, "Terms or intervals")
      ->capture_default_str();
  constant->add_option("--tol", constant_tol, "Quadrature tolerance")
      ->capture_default_str();

  std::int64_t max_n = 100;
  std::string format = "csv";
  CLI::App* ratio =
      app.add_subcommand("ratio", "Convergence table for the Stirling ratio");
  ratio->add_option("--max-n", max_n, "Last row")->capture_default_str();
  ratio->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  std::int64_t samples = 512;
  CLI::App* integrand = app.add_subcommand(
      "integrand", "Sample the combined integrand over [0, 1/2]");
  integrand->add_option("--samples", samples, "Grid size")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "stirling-lab: %s\n", e.what());
    return 2;
  }

  try {
    if (verify->parsed()) {
      if (!(verify_tol >= 1e-14)) {
        return usage_error("--tol must be >= 1e-14");
      }
      if (series_n < 2 || series_n > 100'000'000) {
        return usage_error("--series-n must lie in [2, 1e8]");
      }
      if (sawtooth_t < 10 || sawtooth_t > 100'000'000) {
        return usage_error("--sawtooth-t must lie in [10, 1e8]");
      }
      return cmd_verify(verify_tol, series_n, sawtooth_t, as_json);
    }
    if (constant->parsed()) {
      if (method != "quadrature" && (constant_n < 2 || constant_n > 100'000'000)) {
        return usage_error("--n must lie in [2, 1e8]");
      }
      if (method == "quadrature" && !(constant_tol >= 1e-12)) {
        return usage_error("--tol must be >= 1e-12");
      }
      return cmd_constant(method, constant_n, constant_tol);
    }
    if (ratio->parsed()) {
      if (max_n < 1 || max_n > 10'000) {
        return usage_error("--max-n must lie in [1, 1e4]");
      }
      return cmd_ratio(max_n, format);
    }
    if (integrand->parsed()) {
      if (samples < 2 || samples > 10'000'000) {
        return usage_error("--samples must lie in [2, 1e7]");
      }
      return cmd_integrand(samples);
    }
  } catch (const stirling::BudgetError& e) {
    return usage_error(e.what());
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "stirling-lab: %s\n", e.what());
    return 1;
  }
  return 2;
}
