#include <doctest.h>

#include "permorder/engine.hpp"
#include "permorder/oracle.hpp"

using namespace permorder;

TEST_CASE("count_all_cycles_in pinned values") {
  Engine engine;
  CHECK(engine.count_all_cycles_in(4, {1, 2}) == 10);  // involutions of S_4
  CHECK(engine.count_all_cycles_in(0, {3}) == 1);
  CHECK(engine.count_all_cycles_in(0, {}) == 1);
  CHECK(engine.count_all_cycles_in(5, {1, 5}) == 25);  // identity + 4! five-cycles
  CHECK(engine.count_all_cycles_in(3, {2}) == 0);      // parity obstruction
}

TEST_CASE("proportion pinned values") {
  Engine engine;
  CHECK(engine.proportion(4, 4) == rat_of(2, 3));
  for (i64 n = 1; n <= 8; ++n) CHECK(engine.proportion(n, 1) == make_rat(Int(1), factorial(n)));
  CHECK(engine.proportion(5, 60) == 1);
}

TEST_CASE("stratified counts pinned values") {
  Engine engine;
  const auto s44 = engine.stratified_counts(4, 4);
  CHECK(s44[0] == 10);
  CHECK(s44[1] == 6);
  CHECK(s44[2] == 0);
  CHECK(s44[3] == 0);
  CHECK(s44[4] == 0);

  CHECK(engine.stratified_counts(8, 4)[2] == 1260);  // two 4-cycles

  const auto s34 = engine.stratified_counts(3, 4);
  CHECK(s34[0] == 4);
  for (int j = 1; j < 5; ++j) CHECK(s34[static_cast<std::size_t>(j)] == 0);
}

TEST_CASE("stratified counts sum to the plain count") {
  Engine engine;
  for (i64 n = 1; n <= 20; ++n) {
    for (i64 m : {n, n + 3, 2 * n}) {
      const auto strata = engine.stratified_counts(n, m);
      Int total = 0;
      for (const Int& c : strata) total += c;
      REQUIRE(total == engine.count_all_cycles_in(n, divisors_up_to(m, n)));
    }
  }
}

TEST_CASE("breakdown pinned values") {
  Engine engine;
  const auto b44 = engine.breakdown(4, 4);
  CHECK(b44.p_total == rat_of(2, 3));
  CHECK(b44.p0 == rat_of(5, 12));
  CHECK(b44.p0_1 == 0);
  CHECK(b44.p0_2 == rat_of(1, 4));
  CHECK(b44.p0_3 == rat_of(1, 6));
  CHECK(b44.p1 == rat_of(1, 4));
  CHECK(b44.p2 == 0);
  CHECK(b44.p3 == 0);
  CHECK(b44.p_ge4 == 0);

  const auto b34 = engine.breakdown(3, 4);
  CHECK(b34.p_total == rat_of(2, 3));
  CHECK(b34.p0 == rat_of(2, 3));
  CHECK(b34.p0_1 == 0);
  CHECK(b34.p0_2 == rat_of(1, 2));
  CHECK(b34.p0_3 == rat_of(1, 6));

  CHECK(engine.breakdown(8, 4).p2 == rat_of(1, 32));  // 1260/40320

  CHECK_THROWS_AS(engine.breakdown(2, 4), std::invalid_argument);
}

TEST_CASE("breakdown matches the cycle-type oracle on a sweep") {
  Engine engine;
  for (i64 n = 3; n <= 14; ++n) {
    for (i64 m : {n, n + 1, 2 * n, 3 * n}) {
      const auto b = engine.breakdown(n, m);
      REQUIRE(b.p0 == b.p0_1 + b.p0_2 + b.p0_3);
      REQUIRE(b.p_total == b.p0 + b.p1 + b.p2 + b.p3 + b.p_ge4);
      Int type_total = 0;
      for_each_cycle_type(n, divisors_up_to(m, n),
                          [&](const CycleType& t) { type_total += count_of_type(t); });
      REQUIRE(b.p_total == make_rat(type_total, factorial(n)));
    }
  }
}

TEST_CASE("pge4 upper bound pinned values") {
  Engine engine;
  CHECK(engine.pge4_upper_bound(4, 4) == 0);
  CHECK(engine.pge4_upper_bound(32, 8) == rat_of(1, 98304));
  const auto strata = engine.stratified_counts(32, 8);
  CHECK(make_rat(strata[4], factorial(32)) == rat_of(1, 98304));
}

TEST_CASE("bound context calibration") {
  const BoundContext ctx = BoundContext::calibrate(rat_of(1, 4), 2000);
  CHECK(ctx.covers(1));
  CHECK(ctx.covers(1999));
  CHECK(ctx.c_prime() == 2 * (1 + 3 * ctx.c_delta() + ctx.c_delta() * ctx.c_delta()));
  CHECK_THROWS_AS(BoundContext::calibrate(rat_of(-1, 4), 100), std::invalid_argument);
}

TEST_CASE("p0_bound formula and guards") {
  const BoundContext ctx = BoundContext::calibrate(rat_of(1, 4), 2000);
  Engine engine;
  const Rat c = ctx.c_delta();
  CHECK(engine.p0_bound(10, 10, {}, ctx) == (1 + 3 * c + c * c) * rat_of(4 * 32, 720));
  for (i64 n = 10; n <= 60; ++n) {
    for (i64 m : {n, 2 * n}) {
      REQUIRE(engine.p0_bound(n, m, {}, ctx) >= engine.p0_proportion(n, m));
    }
  }
  CHECK_THROWS_AS(engine.p0_bound(2, 10, {}, ctx), std::invalid_argument);
  CHECK_THROWS_AS(engine.p0_bound(10, 9, {}, ctx), std::invalid_argument);
  const BoundContext wide = BoundContext::calibrate(rat_of(1, 3), 2000);
  CHECK_THROWS_AS(engine.p0_bound(10, 10, {}, wide), std::invalid_argument);  // delta > s - 1/2
}

TEST_CASE("table cache survives eviction pressure") {
  Engine engine(2);
  const Rat first = engine.proportion(12, 12);
  engine.proportion(13, 13);
  engine.proportion(14, 14);
  engine.proportion(15, 15);
  CHECK(engine.proportion(12, 12) == first);
}
