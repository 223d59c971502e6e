#include <doctest.h>

#include <cmath>

#include "permorder/engine.hpp"
#include "permorder/montecarlo.hpp"

using namespace permorder;

TEST_CASE("bounded draws stay in range and are reproducible") {
  SplitMix64 a(99), b(99);
  for (int i = 0; i < 10000; ++i) {
    const u64 x = a.below(7);
    CHECK(x < 7);
    CHECK(x == b.below(7));
  }
  SplitMix64 c(1);
  CHECK(c.below(1) == 0);
  CHECK_THROWS_AS(c.below(0), std::invalid_argument);
}

TEST_CASE("cycle lengths always partition n") {
  SplitMix64 rng(5);
  for (int rep = 0; rep < 2000; ++rep) {
    i64 total = 0;
    for (i64 len : sample_cycle_lengths(37, rng)) {
      CHECK(len >= 1);
      total += len;
    }
    REQUIRE(total == 37);
  }
  SplitMix64 one(11);
  CHECK(sample_cycle_lengths(1, one) == std::vector<i64>{1});
}

TEST_CASE("estimate is deterministic and worker-independent") {
  const SampleEstimate e1 = estimate(30, 60, 150000, 4242, 1);
  const SampleEstimate e2 = estimate(30, 60, 150000, 4242, 2);
  const SampleEstimate e3 = estimate(30, 60, 150000, 4242);
  CHECK(e1.hits == e2.hits);
  CHECK(e1.hits == e3.hits);
  CHECK(e1.estimate == doctest::Approx(static_cast<double>(e1.hits) / 150000.0));
  const SampleEstimate other_seed = estimate(30, 60, 150000, 4243, 1);
  CHECK(other_seed.hits != e1.hits);  // astronomically unlikely to collide
}

TEST_CASE("estimate lands near exact values") {
  Engine engine;
  const double exact = to_double(engine.proportion(5, 5));  // 25/120
  const SampleEstimate est = estimate(5, 5, 100000, 7);
  CHECK(std::fabs(est.estimate - exact) <= 5 * est.std_error);

  const SampleEstimate sure = estimate(1, 3, 1000, 1);
  CHECK(sure.estimate == 1.0);
  CHECK(sure.std_error == 0.0);
}

TEST_CASE("mean fixed point count is close to 1") {
  const FixedPointStat stat = mean_fixed_points(50, 200000, 99);
  CHECK(std::fabs(stat.mean - 1.0) <= 5 * stat.sigma_of_mean);
}
