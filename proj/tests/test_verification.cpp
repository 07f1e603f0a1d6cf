#include <doctest.h>

#include <cmath>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <stirling/verification.hpp>

using stirling::exit_code_for;
using stirling::run_verification_suite;
using stirling::SuiteFault;
using stirling::to_suite_json;
using stirling::VerificationConfig;
using stirling::VerificationSuiteReport;

namespace {

const std::vector<std::string> kExpectedOrder = {
    "decomposition_residual_max",
    "tangent_enclosure_grid",
    "tangent_bracket_width_100000",
    "em_identity_sweep",
    "sawtooth_vs_quadrature",
    "route_quadrature_vs_closed",
    "route_series_vs_closed",
    "route_sawtooth_vs_closed",
    "route_series_vs_quadrature",
    "route_sawtooth_vs_quadrature",
    "route_sawtooth_vs_series",
    "log_cos_value",
    "sin_cos_exchange",
    "double_angle",
    "epsilon_identity(0.1)",
    "epsilon_identity(0.25)",
    "epsilon_identity(0.4)",
};

VerificationConfig small_config() {
  VerificationConfig config;
  config.series_n = 2000;
  config.sawtooth_t = 200;
  return config;
}

}  // namespace

TEST_CASE("default suite passes every check in the documented order") {
  const VerificationSuiteReport report =
      run_verification_suite(VerificationConfig{});
  CHECK(report.overall_pass);
  CHECK(exit_code_for(report) == 0);
  REQUIRE(report.reports.size() == kExpectedOrder.size());
  for (std::size_t i = 0; i < kExpectedOrder.size(); ++i) {
    CHECK(report.reports[i].name == kExpectedOrder[i]);
    CHECK(report.reports[i].pass);
    CHECK(report.reports[i].tolerance > 0.0);
    CHECK(report.reports[i].abs_diff ==
          std::abs(report.reports[i].lhs - report.reports[i].rhs));
  }
  CHECK(report.config.tol == 1e-8);
  CHECK(report.config.series_n == 100'000);
  CHECK(report.config.sawtooth_t == 10'000);
}

TEST_CASE("every check has teeth: a nudged lhs flips the suite") {
  const VerificationConfig config = small_config();
  const VerificationSuiteReport clean = run_verification_suite(config);
  REQUIRE(clean.overall_pass);
  for (const auto& target : clean.reports) {
    SuiteFault fault;
    fault.check_name = target.name;
    fault.lhs_nudge = 3.0 * (target.tolerance + target.abs_diff) + 1e-12;
    const VerificationSuiteReport faulted =
        run_verification_suite(config, fault);
    CHECK_FALSE(faulted.overall_pass);
    CHECK(exit_code_for(faulted) == 1);
    int failed = 0;
    for (const auto& r : faulted.reports) {
      if (!r.pass) {
        ++failed;
        CHECK(r.name == target.name);
      }
    }
    CHECK(failed == 1);
  }
}

TEST_CASE("suite JSON carries exactly the documented keys") {
  const VerificationSuiteReport report =
      run_verification_suite(small_config());
  const nlohmann::json j = nlohmann::json::parse(to_suite_json(report));
  REQUIRE(j.is_object());
  CHECK(j.size() == 4);
  CHECK(j.contains("reports"));
  CHECK(j.contains("generated_at"));
  CHECK(j.contains("overall_pass"));
  CHECK(j.contains("config"));

  CHECK(j["overall_pass"].is_boolean());
  CHECK(j["config"].size() == 3);
  CHECK(j["config"]["tol"].get<double>() == report.config.tol);
  CHECK(j["config"]["series_n"].get<std::int64_t>() == 2000);
  CHECK(j["config"]["sawtooth_t"].get<std::int64_t>() == 200);

  REQUIRE(j["reports"].is_array());
  REQUIRE(j["reports"].size() == kExpectedOrder.size());
  for (const auto& r : j["reports"]) {
    CHECK(r.size() == 6);
    for (const char* key :
         {"name", "lhs", "rhs", "abs_diff", "tolerance", "pass"}) {
      CHECK(r.contains(key));
    }
  }

  const std::regex rfc3339(R"(^\d{4}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2}Z$)");
  CHECK(std::regex_match(j["generated_at"].get<std::string>(), rfc3339));
}

TEST_CASE("suite output is deterministic apart from the timestamp") {
  const VerificationConfig config = small_config();
  nlohmann::json a = nlohmann::json::parse(
      to_suite_json(run_verification_suite(config)));
  nlohmann::json b = nlohmann::json::parse(
      to_suite_json(run_verification_suite(config)));
  a.erase("generated_at");
  b.erase("generated_at");
  CHECK(a == b);
}

TEST_CASE("table format lists every check and an overall line") {
  const VerificationSuiteReport report =
      run_verification_suite(small_config());
  const std::string table = stirling::format_suite_table(report);
  for (const std::string& name : kExpectedOrder) {
    CHECK(table.find(name) != std::string::npos);
  }
  CHECK(table.find("overall: PASS (17/17)") != std::string::npos);
  CHECK(table.find("FAIL") == std::string::npos);
}

TEST_CASE("config validation") {
  VerificationConfig config;
  config.tol = 1e-15;
  CHECK_THROWS_AS(run_verification_suite(config), std::invalid_argument);
  config = VerificationConfig{};
  config.series_n = 1;
  CHECK_THROWS_AS(run_verification_suite(config), std::invalid_argument);
  config = VerificationConfig{};
  config.sawtooth_t = 9;
  CHECK_THROWS_AS(run_verification_suite(config), std::invalid_argument);
  config = VerificationConfig{};
  config.series_n = 200'000'000;
  CHECK_THROWS_AS(run_verification_suite(config), std::invalid_argument);
}
