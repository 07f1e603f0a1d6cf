#include <stirling/quadrature.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include <stirling/errors.hpp>
#include <stirling/summation.hpp>

namespace stirling {
namespace {

// (G7, K15) abscissae on [-1, 1], positive half, ascending. The embedded
// Gauss-7 points sit at the even indices.
constexpr std::array<double, 8> kAbscissae = {
    0.0,
    0.207784955007898468,
    0.405845151377397167,
    0.586087235467691130,
    0.741531185599394440,
    0.864864423359769073,
    0.949107912342758525,
    0.991455371120812639,
};

constexpr std::array<double, 8> kKronrodWeights = {
    0.209482141084727828,
    0.204432940075298892,
    0.190350578064785410,
    0.169004726639267903,
    0.140653259715525919,
    0.104790010322250184,
    0.0630920926299785533,
    0.0229353220105292250,
};

// Gauss-7 weights for abscissa indices 0, 2, 4, 6.
constexpr std::array<double, 4> kGaussWeights = {
    0.417959183673469388,
    0.381830050505118945,
    0.279705391489276668,
    0.129484966168869693,
};

struct Segment {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
};

// Max-heap ordering: largest error first, leftmost interval on ties.
bool segment_before(const Segment& s, const Segment& t) {
  if (s.error != t.error) return s.error < t.error;
  return s.a > t.a;
}

class Evaluator {
 public:
  Evaluator(const std::function<double(double)>& f, std::int64_t budget)
      : f_(f), budget_(budget) {}

  double operator()(double x) {
    ++count_;
    const double y = f_(x);
    if (!std::isfinite(y)) {
      char msg[80];
      std::snprintf(msg, sizeof msg,
                    "integrand returned a non-finite value at x = %.17g", x);
      throw EvaluationError(msg, x);
    }
    return y;
  }

  std::int64_t count() const { return count_; }
  bool can_afford(std::int64_t evals) const { return count_ + evals <= budget_; }

 private:
  const std::function<double(double)>& f_;
  std::int64_t budget_;
  std::int64_t count_ = 0;
};

Segment gk15(Evaluator& eval, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = eval(c);
  double kronrod = kKronrodWeights[0] * fc;
  double gauss = kGaussWeights[0] * fc;
  for (std::size_t i = 1; i < kAbscissae.size(); ++i) {
    const double dx = h * kAbscissae[i];
    const double pair = eval(c - dx) + eval(c + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 0) gauss += kGaussWeights[i / 2] * pair;
  }
  return {a, b, kronrod * h, std::abs(kronrod - gauss) * h};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double tol,
                           const IntegrateOptions& options) {
  if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");
  if (!(tol >= 1e-14)) {
    throw std::invalid_argument(
        "integrate: tol below 1e-14 is unattainable in binary64");
  }
  if (options.max_evaluations < 15) {
    throw std::invalid_argument("integrate: max_evaluations must be >= 15");
  }

  Evaluator eval(f, options.max_evaluations);
  std::vector<Segment> heap;
  heap.push_back(gk15(eval, a, b));
  std::vector<Segment> stuck;  // intervals too narrow to bisect further
  double err_active = heap.front().error;
  double err_stuck = 0.0;
  int splits_since_refresh = 0;

  while (err_active + err_stuck > tol && !heap.empty() &&
         eval.can_afford(30)) {
    std::pop_heap(heap.begin(), heap.end(), segment_before);
    const Segment worst = heap.back();
    heap.pop_back();
    err_active -= worst.error;

    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b)) {
      stuck.push_back(worst);
      err_stuck += worst.error;
      continue;
    }
    for (const Segment& half :
         {gk15(eval, worst.a, mid), gk15(eval, mid, worst.b)}) {
      heap.push_back(half);
      std::push_heap(heap.begin(), heap.end(), segment_before);
      err_active += half.error;
    }

    // The running total accumulates roundoff; rebuild it periodically.
    if (++splits_since_refresh >= 128) {
      splits_since_refresh = 0;
      err_active = 0.0;
      for (const Segment& s : heap) err_active += s.error;
    }
  }

  std::vector<Segment> leaves;
  leaves.reserve(heap.size() + stuck.size());
  leaves.insert(leaves.end(), heap.begin(), heap.end());
  leaves.insert(leaves.end(), stuck.begin(), stuck.end());
  std::sort(leaves.begin(), leaves.end(),
            [](const Segment& s, const Segment& t) { return s.a < t.a; });

  CompensatedSum value;
  CompensatedSum error;
  for (const Segment& s : leaves) {
    value.add(s.value);
    error.add(s.error);
  }

  QuadratureResult result;
  result.value = value.value();
  result.error_estimate = std::max(error.value(), 0.0);
  result.evaluations = eval.count();
  result.converged = result.error_estimate <= tol;
  return result;
}

}  // namespace stirling
