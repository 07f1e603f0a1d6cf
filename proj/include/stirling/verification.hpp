#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <stirling/identity_report.hpp>

namespace stirling {

struct VerificationConfig {
  double tol = 1e-8;
  std::int64_t series_n = 100'000;
  std::int64_t sawtooth_t = 10'000;
};

struct VerificationSuiteReport {
  std::vector<IdentityReport> reports;
  std::string generated_at;  // RFC 3339 UTC, the only nondeterministic field
  bool overall_pass = false;
  VerificationConfig config;
};

// Test-only fault injection: before a report whose name matches check_name
// is scored, its lhs is shifted by lhs_nudge. Shifting lhs by d is
// arithmetically the same as corrupting that check's reference value by -d,
// which is how CI proves every check can actually fail. An empty name
// injects nothing.
struct SuiteFault {
  std::string check_name;
  double lhs_nudge = 0.0;
};

// Runs every cross-check in a fixed, documented order. Deterministic apart
// from the timestamp. Throws std::invalid_argument for out-of-range config
// (tol < 1e-14, series_n outside [2, 1e8], sawtooth_t outside [10, 1e8]).
VerificationSuiteReport run_verification_suite(const VerificationConfig& config,
                                               const SuiteFault& fault = {});

// 0 when every check passed, 1 otherwise.
int exit_code_for(const VerificationSuiteReport& report);

// JSON object with exactly the keys reports, generated_at, overall_pass,
// config; numbers serialized round-trip-exact.
std::string to_suite_json(const VerificationSuiteReport& report);

// Fixed-width human-readable table, one row per check plus an overall line.
std::string format_suite_table(const VerificationSuiteReport& report);

}  // namespace stirling
