#include <doctest.h>

#include <set>

#include "permorder/oracle.hpp"

using namespace permorder;

namespace {

std::set<std::vector<i64>> collect_types(i64 n, const std::vector<i64>& parts) {
  std::set<std::vector<i64>> seen;
  for_each_cycle_type(n, parts, [&](const CycleType& t) {
    std::vector<i64> flat;
    for (auto [d, k] : t.parts) {
      for (i64 i = 0; i < k; ++i) flat.push_back(d);
    }
    REQUIRE(seen.insert(flat).second);  // each partition exactly once
  });
  return seen;
}

}  // namespace

TEST_CASE("cycle type enumeration") {
  CHECK(collect_types(4, {1, 2}) ==
        std::set<std::vector<i64>>{{1, 1, 1, 1}, {1, 1, 2}, {2, 2}});
  CHECK(collect_types(4, {1, 2, 4}) ==
        std::set<std::vector<i64>>{{1, 1, 1, 1}, {1, 1, 2}, {2, 2}, {4}});
  CHECK(collect_types(3, {2}).empty());
  CHECK(collect_types(0, {1, 2}) == std::set<std::vector<i64>>{{}});
}

TEST_CASE("count_of_type") {
  CycleType four;
  four.parts = {{4, 1}};
  CHECK(count_of_type(four) == 6);

  CycleType two_two;
  two_two.parts = {{2, 2}};
  CHECK(count_of_type(two_two) == 3);

  CycleType four_four;
  four_four.parts = {{4, 2}};
  CHECK(count_of_type(four_four) == 1260);

  CycleType mixed;  // 1^2 2 3 on 7 points: 7!/(1^2 2! * 2 * 3) = 420
  mixed.parts = {{1, 2}, {2, 1}, {3, 1}};
  CHECK(count_of_type(mixed) == 420);
  CHECK(mixed.degree() == 7);
  CHECK(mixed.large_part_count(6, ThresholdExponent(3, 4)) == 0);
}

TEST_CASE("brute_count") {
  CHECK(brute_count(4, 4) == 16);
  CHECK(brute_count(3, 3) == 3);
  CHECK(brute_count(1, 7) == 1);
  CHECK(brute_count(6, 8) == 256);
  CHECK_THROWS_AS(brute_count(9, 2), std::invalid_argument);
}

TEST_CASE("brute_event_count") {
  CHECK(brute_event_count(4, 4, 0) == 6);    // the 4-cycles
  CHECK(brute_event_count(6, 8, 2) == 180);  // contain a 4-cycle
  CHECK_THROWS_AS(brute_event_count(6, 8, 3), std::invalid_argument);  // n <= 2t
}

TEST_CASE("crosscheck pinned cases") {
  const auto r84 = crosscheck(8, 4);
  CHECK(r84.pass);
  CHECK(r84.dp_strata[2] == 1260);
  CHECK(r84.type_strata[2] == 1260);

  const auto r77 = crosscheck(7, 7);
  CHECK(r77.pass);
  CHECK(r77.dp_total == 721);

  const auto r68 = crosscheck(6, 8);
  CHECK(r68.pass);
  CHECK(r68.dp_total == 256);
  CHECK(r68.marked_split_checked);

  CHECK_THROWS_AS(crosscheck(31, 5), std::invalid_argument);
}

TEST_CASE("crosscheck sweep stays green") {
  for (i64 n = 1; n <= 12; ++n) {
    for (i64 m = 1; m <= 2 * n; ++m) {
      REQUIRE(crosscheck(n, m).pass);
    }
  }
}
