#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <stirling/summation.hpp>

#include "oracles.hpp"

using stirling::CompensatedSum;
using stirling::sum_terms;
using stirling::sum_terms_serial;

TEST_CASE("compensated sum recovers what naive addition loses") {
  CompensatedSum acc;
  acc.add(1.0);
  for (int i = 0; i < 10'000'000; ++i) acc.add(1e-16);
  CHECK(acc.value() == doctest::Approx(1.0 + 1e-9).epsilon(1e-12));

  double naive = 1.0;
  for (int i = 0; i < 10'000'000; ++i) naive += 1e-16;
  CHECK(naive == 1.0);  // every addend vanishes against the running sum
}

TEST_CASE("empty and single-element sums") {
  CHECK(sum_terms(0, [](std::int64_t) { return 1.0; }) == 0.0);
  CHECK(sum_terms(-5, [](std::int64_t) { return 1.0; }) == 0.0);
  CHECK(sum_terms(1, [](std::int64_t) { return 0.125; }) == 0.125);
  CHECK(sum_terms_serial(0, [](std::int64_t) { return 1.0; }) == 0.0);
}

TEST_CASE("blocked sum equals serial sum bitwise below one block") {
  auto term = [](std::int64_t i) { return 1.0 / (1.0 + static_cast<double>(i)); };
  for (std::int64_t count : {1, 7, 4095, 4096}) {
    CHECK(sum_terms(count, term) == sum_terms_serial(count, term));
  }
}

TEST_CASE("cancellation triples are summed exactly across block seams") {
  // Triples (1e16, 1, -1e16) each contribute exactly 1, but the +1 is below
  // half an ulp of the running sum, so naive addition returns 0. The triples
  // straddle block boundaries (3 does not divide 4096).
  auto term = [](std::int64_t i) {
    switch (i % 3) {
      case 0: return 1e16;
      case 1: return 1.0;
      default: return -1e16;
    }
  };
  const std::int64_t triples = 100'000;
  CHECK(sum_terms(3 * triples, term) == static_cast<double>(triples));
  CHECK(sum_terms_serial(3 * triples, term) == static_cast<double>(triples));

  double naive = 0.0;
  for (std::int64_t i = 0; i < 3 * triples; ++i) naive += term(i);
  CHECK(naive == 0.0);
}

TEST_CASE("blocked sum tracks the long-double oracle on random data") {
  std::mt19937_64 rng(20260821);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> data(1'000'000);
  for (double& x : data) x = dist(rng);

  auto term = [&data](std::int64_t i) { return data[static_cast<std::size_t>(i)]; };
  const auto count = static_cast<std::int64_t>(data.size());
  const double blocked = sum_terms(count, term);
  const double serial = sum_terms_serial(count, term);
  const double oracle = oracles::long_double_sum(count, term);

  CHECK(std::abs(blocked - oracle) <= 1e-12);
  CHECK(std::abs(serial - oracle) <= 1e-12);
  CHECK(std::abs(blocked - serial) <= 1e-13);
}

TEST_CASE("blocked sum is reproducible") {
  auto term = [](std::int64_t i) {
    const double x = static_cast<double>(i % 977) - 488.0;
    return x / (1.0 + x * x);
  };
  const double first = sum_terms(300'000, term);
  const double second = sum_terms(300'000, term);
  CHECK(first == second);
}

TEST_CASE("inverse-square series against the oracle") {
  auto term = [](std::int64_t i) {
    const double k = static_cast<double>(i) + 1.0;
    return 1.0 / (k * k);
  };
  const double blocked = sum_terms(2'000'000, term);
  const double oracle = oracles::long_double_sum(2'000'000, term);
  CHECK(std::abs(blocked - oracle) <= 1e-14);
}
