#include <doctest.h>

#include "permorder/asymptotics.hpp"
#include "permorder/oracle.hpp"

using namespace permorder;

TEST_CASE("regime classification") {
  const Regime a = regime(10, 10);
  CHECK(a.r == 1);
  CHECK(a.alpha);
  CHECK_FALSE(a.alpha_prime);  // 10 - 5 = 5 >= 10/11

  const Regime b = regime(10, 25);
  CHECK(b.r == 2);
  CHECK_FALSE(b.alpha);
  CHECK_FALSE(b.alpha_prime);  // 3 does not divide 25

  const Regime c = regime(20, 36);
  CHECK(c.r == 1);
  CHECK_FALSE(c.alpha);
  CHECK(c.alpha_prime);  // 20 - 18 = 2 < 36/11

  CHECK_THROWS_AS(regime(10, 9), std::invalid_argument);
}

TEST_CASE("alpha-prime rule variants can differ at the boundary") {
  // n=14, m=24, r=1: n - m/2 = 2; 2*11 < 24 (definition true) but 2*12 = 24 (remark false).
  const Regime def = regime(14, 24, AlphaPrimeRule::definition);
  const Regime rem = regime(14, 24, AlphaPrimeRule::remark);
  CHECK(def.alpha_prime);
  CHECK_FALSE(rem.alpha_prime);
}

TEST_CASE("t_and_k pinned values") {
  const TkStats a = t_and_k(12, 12, 1);
  CHECK(a.t == 3);
  CHECK(a.k == 180);
  CHECK(a.k_bound == 1024);

  const TkStats b = t_and_k(13, 13, 1);
  CHECK(b.t == 0);
  CHECK(b.k == 0);

  const TkStats c = t_and_k(12, 24, 2);
  CHECK(c.t == 3);
  CHECK(c.k == 126);
  CHECK(c.k_bound == 625);

  CHECK_THROWS_AS(t_and_k(12, 40, 2), std::invalid_argument);
}

TEST_CASE("pair sets and coefficients") {
  const PairSet t1 = pair_set(PairSetKind::T, 1, 12);
  CHECK(t1.pairs == std::vector<std::pair<i64, i64>>{{1, 1}});
  CHECK(t1.coefficient == 2);

  const PairSet t1odd = pair_set(PairSetKind::T, 1, 13);
  CHECK(t1odd.pairs.empty());
  CHECK(t1odd.coefficient == 0);

  const PairSet t2 = pair_set(PairSetKind::T, 2, 24);
  CHECK(t2.pairs == std::vector<std::pair<i64, i64>>{{1, 4}, {2, 2}, {4, 1}});
  CHECK(t2.coefficient == rat_of(13, 2));

  const PairSet tp = pair_set(PairSetKind::TPrime, 1, 36);
  CHECK(tp.pairs == std::vector<std::pair<i64, i64>>{{3, 3}});
  CHECK(tp.coefficient == 2);
}

TEST_CASE("predict on the three forms") {
  Engine engine;
  const auto a = predict(12, 12, engine);
  CHECK(a.form == PredictionForm::leading_rn);
  CHECK(a.predicted == rat_of(7, 72));
  CHECK(a.exact == engine.proportion(12, 12));
  CHECK(a.residual == a.exact - a.predicted);

  const auto b = predict(20, 36, engine);
  CHECK(b.form == PredictionForm::leading_tfact);
  REQUIRE(b.family_t.has_value());
  CHECK(*b.family_t == 2);
  CHECK(b.predicted == rat_of(1, 18) + rat_of(2, 324));

  const auto c = predict(10, 25, engine);
  CHECK(c.form == PredictionForm::upper_bound);
  CHECK_FALSE(c.regime.alpha_prime);
  CHECK(c.predicted == t_and_k(10, 25, 2).k / 100);

  CHECK_THROWS_AS(predict(10, 9, engine), std::invalid_argument);
  CHECK_THROWS_AS(predict(20, 36, engine, 3), std::invalid_argument);  // 36 != 6*17
}

TEST_CASE("exact lower bounds at small n") {
  Engine engine;
  const auto a = lower_bound_check(4, 4, engine);
  CHECK(a.pass);
  CHECK(a.lower == rat_of(3, 8));
  CHECK(a.exact == rat_of(2, 3));

  const auto b = lower_bound_check(6, 6, engine);
  CHECK(b.pass);
  CHECK(b.exact == rat_of(396, 720));
  CHECK(b.lower == rat_of(1, 6) + rat_of(2, 36));

  const auto c = lower_bound_check(13, 13, engine);
  CHECK(c.pass);
  CHECK(c.lower == rat_of(1, 13));

  const auto d = lower_bound_check(11, 2 * (11 - 2), engine, 2);
  CHECK(d.pass);
}

TEST_CASE("residual_scan fits a steep negative exponent") {
  Engine engine;
  const auto grid = std::vector<i64>{20, 30, 40, 50, 60, 70};
  const ErrorFit fit = residual_scan(Family{Family::Kind::rn, 1}, grid, engine);
  CHECK(fit.samples.size() == grid.size());
  CHECK(fit.used >= 5);
  CHECK(fit.fitted_exponent < -1.5);  // crude sanity at small n
  for (const auto& [n, res] : fit.samples) REQUIRE(res >= 0);
  CHECK_THROWS_AS(residual_scan(Family{Family::Kind::rn, 1}, {10, 20}, engine),
                  std::invalid_argument);
}

TEST_CASE("conditional probabilities") {
  Engine engine;
  CHECK(conditional_probability(4, 4, 0, engine) == rat_of(3, 8));
  CHECK(conditional_probability(5, 5, 0, engine) == rat_of(24, 25));
  CHECK(conditional_probability(6, 8, 2, engine) == rat_of(45, 64));
  CHECK(conditional_probability(3, 3, 0, engine) == rat_of(2, 3));

  CHECK_THROWS_AS(conditional_probability(6, 7, 0, engine), std::invalid_argument);  // n does not divide m
  CHECK_THROWS_AS(conditional_probability(6, 5, 2, engine), std::invalid_argument);  // (n-t) does not divide m
  CHECK_THROWS_AS(conditional_probability(8, 8, 4, engine), std::invalid_argument);  // n <= 2t
  CHECK_THROWS_AS(conditional_probability(7, 8, 3, engine), std::invalid_argument);  // lcm(1..3) does not divide 8
}

TEST_CASE("conditional agrees with exhaustive enumeration") {
  Engine engine;
  for (i64 n = 3; n <= 7; ++n) {
    for (i64 r = 1; r <= 2; ++r) {
      REQUIRE(conditional_probability(n, r * n, 0, engine) ==
              make_rat(brute_event_count(n, r * n, 0), brute_count(n, r * n)));
    }
  }
  REQUIRE(conditional_probability(8, 12, 2, engine) ==
          make_rat(brute_event_count(8, 12, 2), brute_count(8, 12)));
}
