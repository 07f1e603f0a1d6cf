#pragma once

#include <cmath>
#include <string>
#include <utility>

namespace stirling {

// Outcome of checking one identity: both sides, their absolute difference,
// and the tolerance the check was held to.
struct IdentityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_diff = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline IdentityReport make_identity_report(std::string name, double lhs,
                                           double rhs, double tolerance) {
  IdentityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_diff = std::abs(lhs - rhs);
  r.tolerance = tolerance;
  r.pass = r.abs_diff <= tolerance;
  return r;
}

}  // namespace stirling
