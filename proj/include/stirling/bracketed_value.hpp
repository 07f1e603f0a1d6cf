#pragma once

namespace stirling {

// Two-sided enclosure [lower, upper] of a real value.
struct BracketedValue {
  double lower = 0.0;
  double upper = 0.0;

  double midpoint() const { return 0.5 * (lower + upper); }
  double width() const { return upper - lower; }
  bool contains(double x) const { return lower <= x && x <= upper; }
};

}  // namespace stirling
