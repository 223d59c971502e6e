#include <doctest.h>

#include "permorder/rational.hpp"

using namespace permorder;

TEST_CASE("make_rat reduces and normalizes the sign") {
  CHECK(make_rat(Int(2), Int(4)) == rat_of(1, 2));
  CHECK(make_rat(Int(3), Int(-6)) == rat_of(-1, 2));
  CHECK(make_rat(Int(0), Int(7)) == 0);
  CHECK(rat_of(1, 2).get_den() == 2);
  CHECK_THROWS_AS(make_rat(Int(1), Int(0)), std::invalid_argument);
}

TEST_CASE("factorial table") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == Int("2432902008176640000"));
  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("integer roots round upward") {
  CHECK(root_ceil(Int(0), 2) == 0);
  CHECK(root_ceil(Int(16), 2) == 4);
  CHECK(root_ceil(Int(17), 2) == 5);
  CHECK(root_ceil(Int(26), 3) == 3);
  CHECK(root_ceil(Int(27), 3) == 3);
  CHECK(root_ceil(Int(28), 3) == 4);
}

TEST_CASE("pow_ceil computes ceil(m^(p/q))") {
  CHECK(pow_ceil(10, 3, 2) == 32);   // 10^1.5 = 31.62...
  CHECK(pow_ceil(16, 3, 4) == 8);    // exact
  CHECK(pow_ceil(8, 6, 4) == 23);    // 8^1.5 = 22.62...
  CHECK(pow_ceil(1, 5, 3) == 1);
}

TEST_CASE("decimal_string is normalized scientific with 12 digits") {
  CHECK(decimal_string(rat_of(2, 3)) == "6.66666666667e-01");
  CHECK(decimal_string(rat_of(-2, 3)) == "-6.66666666667e-01");
  CHECK(decimal_string(rat_of(1)) == "1.00000000000e+00");
  CHECK(decimal_string(rat_of(0)) == "0");
  CHECK(decimal_string(rat_of(1, 98304)) == "1.01725260417e-05");
  CHECK(decimal_string(rat_of(45, 64)) == "7.03125000000e-01");
  // rounding carry: 0.99999999999951 -> 1.0e+00
  CHECK(decimal_string(make_rat(Int("99999999999951"), Int("100000000000000"))) == "1.00000000000e+00");
}

TEST_CASE("decimal_string rounds half to even") {
  CHECK(decimal_string(rat_of(25, 100), 1) == "2e-01");
  CHECK(decimal_string(rat_of(35, 100), 1) == "4e-01");
  CHECK(decimal_string(rat_of(1, 2), 1) == "5e-01");
}

TEST_CASE("compare_scaled orders a*n^(p/q) exactly") {
  // 1*4^1.5 = 8 vs 2*1^1.5 = 2
  CHECK(compare_scaled(rat_of(1), 4, rat_of(2), 1, 3, 2) > 0);
  CHECK(compare_scaled(rat_of(2), 1, rat_of(1), 4, 3, 2) < 0);
  // equal: 1*8^(2/3) = 4 = 4*1
  CHECK(compare_scaled(rat_of(1), 8, rat_of(4), 1, 2, 3) == 0);
  // signs dominate
  CHECK(compare_scaled(rat_of(-1), 100, rat_of(1, 1000000), 1, 3, 2) < 0);
  CHECK(compare_scaled(rat_of(0), 10, rat_of(0), 20, 3, 2) == 0);
  // both negative: closer to zero is larger
  CHECK(compare_scaled(rat_of(-1), 1, rat_of(-1), 4, 3, 2) > 0);
  // odd power route (12/5) keeps sign handling consistent
  CHECK(compare_scaled(rat_of(1, 100), 32, rat_of(1, 100), 1, 12, 5) > 0);
}
