#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace stirling {

// Neumaier-compensated accumulator: carries a correction term holding the
// low-order bits each addition rounds away.
class CompensatedSum {
 public:
  void add(double value) {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      correction_ += (sum_ - t) + value;
    } else {
      correction_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + correction_; }
  double raw_sum() const { return sum_; }
  double correction() const { return correction_; }

 private:
  double sum_ = 0.0;
  double correction_ = 0.0;
};

namespace detail {
inline constexpr std::int64_t kSumBlock = 4096;
}

// Compensated sum of term(i) for i in [0, count). Terms are grouped into
// fixed 4096-wide blocks, each summed in ascending index order; block
// partials are then folded in ascending block order. The decomposition is
// independent of the schedule, so the result is bit-identical whether the
// block loop runs on one OpenMP thread or many.
template <class TermFn>
double sum_terms(std::int64_t count, TermFn&& term) {
  if (count <= 0) return 0.0;
  const std::int64_t nblocks =
      (count + detail::kSumBlock - 1) / detail::kSumBlock;
  if (nblocks == 1) {
    CompensatedSum acc;
    for (std::int64_t i = 0; i < count; ++i) acc.add(term(i));
    return acc.value();
  }
  std::vector<CompensatedSum> blocks(static_cast<std::size_t>(nblocks));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t b = 0; b < nblocks; ++b) {
    const std::int64_t lo = b * detail::kSumBlock;
    const std::int64_t hi = std::min(count, lo + detail::kSumBlock);
    CompensatedSum acc;
    for (std::int64_t i = lo; i < hi; ++i) acc.add(term(i));
    blocks[static_cast<std::size_t>(b)] = acc;
  }
  CompensatedSum total;
  for (const CompensatedSum& acc : blocks) {
    total.add(acc.raw_sum());
    total.add(acc.correction());
  }
  return total.value();
}

// Single-pass serial version, kept as the reference the blocked kernel is
// tested and benchmarked against.
template <class TermFn>
double sum_terms_serial(std::int64_t count, TermFn&& term) {
  CompensatedSum acc;
  for (std::int64_t i = 0; i < count; ++i) acc.add(term(i));
  return acc.value();
}

}  // namespace stirling
