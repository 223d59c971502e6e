#include <doctest.h>

#include "permorder/divisors.hpp"

using namespace permorder;

TEST_CASE("divisors_up_to") {
  CHECK(divisors_up_to(12, 7) == std::vector<i64>{1, 2, 3, 4, 6});
  CHECK(divisors_up_to(5, 5) == std::vector<i64>{1, 5});
  CHECK(divisors_up_to(6, 6) == std::vector<i64>{1, 2, 3, 6});
  CHECK(divisors_up_to(9, 0).empty());
  CHECK(divisors_of(36) == std::vector<i64>{1, 2, 3, 4, 6, 9, 12, 18, 36});
}

TEST_CASE("divisor_count") {
  CHECK(divisor_count(12) == 6);
  CHECK(divisor_count(1) == 1);
  CHECK(divisor_count(97) == 2);
  for (i64 m = 1; m <= 2000; ++m) {
    REQUIRE(divisor_count(m) == static_cast<i64>(divisors_of(m).size()));
  }
}

TEST_CASE("threshold exponent demands (1/2, 1)") {
  CHECK_THROWS_AS(ThresholdExponent(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(ThresholdExponent(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(ThresholdExponent(5, 4), std::invalid_argument);
  CHECK(ThresholdExponent(3, 4).str() == "3/4");
  CHECK(ThresholdExponent(6, 8) == ThresholdExponent(3, 4));
  CHECK(ThresholdExponent::parse("2/3").p() == 2);
  CHECK_THROWS_AS(ThresholdExponent::parse("0.75"), std::invalid_argument);
}

TEST_CASE("split_small_large with the tie on the large side") {
  const auto a = split_small_large(16, 16);
  CHECK(a.small == std::vector<i64>{1, 2, 4});
  CHECK(a.large == std::vector<i64>{8, 16});  // 8 = 16^(3/4) exactly

  const auto b = split_small_large(4, 3);
  CHECK(b.small == std::vector<i64>{1, 2});
  CHECK(b.large.empty());

  const auto c = split_small_large(8, 8);
  CHECK(c.small == std::vector<i64>{1, 2, 4});
  CHECK(c.large == std::vector<i64>{8});

  CHECK(split_small_large(12, 12).all() == divisors_up_to(12, 12));
}

TEST_CASE("classify_top_divisor matches the three-way pattern") {
  CHECK(classify_top_divisor(10, 20, 10, 2) == TopDivisorClass::EqualsDegree);
  CHECK(classify_top_divisor(3, 6, 6, 1) == TopDivisorClass::QuotientRPlus1);
  CHECK(classify_top_divisor(2, 6, 6, 1) == TopDivisorClass::QuotientAtLeastRPlus2);
  CHECK_THROWS_AS(classify_top_divisor(5, 6, 6, 1), std::invalid_argument);   // 5 does not divide 6
  CHECK_THROWS_AS(classify_top_divisor(2, 20, 6, 1), std::invalid_argument);  // regime violated
  CHECK_THROWS_AS(classify_top_divisor(12, 12, 6, 1), std::invalid_argument); // d > n
}

TEST_CASE("boundary_pairs") {
  const auto p12 = boundary_pairs(12, 12, 1);
  bool found = false;
  for (const auto& p : p12) {
    if (p.d1 == 6 && p.d2 == 6) {
      found = true;
      CHECK(p.c1 == 2);
      CHECK(p.c2 == 2);
    }
  }
  CHECK(found);

  CHECK(boundary_pairs(13, 13, 1).empty());

  const auto p20 = boundary_pairs(20, 10, 2);
  found = false;
  for (const auto& p : p20) {
    if (p.d1 == 4 && p.d2 == 5) {
      found = true;
      CHECK(p.c1 == 5);
      CHECK(p.c2 == 4);
    }
  }
  CHECK(found);

  CHECK_THROWS_AS(boundary_pairs(20, 10, 1), std::invalid_argument);
}
