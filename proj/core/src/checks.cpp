#include "permorder/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "permorder/asymptotics.hpp"
#include "permorder/divisors.hpp"
#include "permorder/engine.hpp"
#include "permorder/montecarlo.hpp"
#include "permorder/oracle.hpp"
#include "permorder/parallel.hpp"
#include "permorder/rational.hpp"

namespace permorder::checks {

namespace {

// Keeps the lowest-ordered failure across parallel workers so that reports
// are deterministic regardless of scheduling.
class Failures {
 public:
  void add(i64 order, std::string detail) {
    std::lock_guard<std::mutex> lock(mu_);
    if (!has_ || order < order_) {
      has_ = true;
      order_ = order;
      detail_ = std::move(detail);
    }
  }

  bool any() const { return has_; }
  std::string detail() const { return detail_; }

 private:
  std::mutex mu_;
  bool has_ = false;
  i64 order_ = 0;
  std::string detail_;
};

CheckResult make_result(std::string name, Failures& failures, std::string pass_detail = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.pass = !failures.any();
  r.detail = r.pass ? std::move(pass_detail) : failures.detail();
  return r;
}

std::string fmt_rat(const Rat& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

const ThresholdExponent kDefaultS{};  // 3/4

// ---------------------------------------------------------------- divisors

CheckResult check_divisor_count(i64 k_max) {
  Failures fails;
  for (i64 m = 1; m <= k_max; ++m) {
    if (static_cast<i64>(divisors_of(m).size()) != divisor_count(m)) {
      fails.add(m, "divisor count mismatch at m=" + std::to_string(m));
      break;
    }
  }
  return make_result("divisor_count_vs_enumeration", fails,
                     "m <= " + std::to_string(k_max));
}

CheckResult check_divisor_split() {
  Failures fails;
  const ThresholdExponent exponents[] = {ThresholdExponent(3, 4), ThresholdExponent(2, 3),
                                         ThresholdExponent(5, 8)};
  for (i64 m = 1; m <= 800 && !fails.any(); ++m) {
    const i64 ns[] = {1, std::max<i64>(1, m / 3), m, 2 * m};
    for (i64 n : ns) {
      for (const auto& s : exponents) {
        const DivisorSplit split = split_small_large(m, n, s);
        if (split.all() != divisors_up_to(m, n)) {
          fails.add(m, "split does not partition the divisor set at m=" + std::to_string(m) +
                           " n=" + std::to_string(n) + " s=" + s.str());
        }
        for (i64 d : split.small) {
          if (s.is_large(d, m)) fails.add(m, "small element classified large at m=" + std::to_string(m));
        }
        for (i64 d : split.large) {
          if (!s.is_large(d, m)) fails.add(m, "large element classified small at m=" + std::to_string(m));
        }
      }
    }
  }
  // Exact threshold hits d = m^s land on the large side: d = k^3, m = k^4.
  for (i64 k = 2; k <= 6; ++k) {
    const i64 m = k * k * k * k;
    const auto split = split_small_large(m, m, ThresholdExponent(3, 4));
    if (!std::binary_search(split.large.begin(), split.large.end(), k * k * k)) {
      fails.add(m, "boundary divisor not classified large at m=" + std::to_string(m));
    }
  }
  // Pinned examples.
  {
    const auto a = split_small_large(16, 16);
    if (a.small != std::vector<i64>{1, 2, 4} || a.large != std::vector<i64>{8, 16}) {
      fails.add(16, "split(16,16,3/4) off");
    }
    const auto b = split_small_large(4, 3);
    if (b.small != std::vector<i64>{1, 2} || !b.large.empty()) fails.add(4, "split(4,3,3/4) off");
    const auto c = split_small_large(8, 8);
    if (c.small != std::vector<i64>{1, 2, 4} || c.large != std::vector<i64>{8}) {
      fails.add(8, "split(8,8,3/4) off");
    }
  }
  return make_result("divisor_split_partition", fails);
}

CheckResult check_top_divisor_trichotomy(i64 n_max, i64 r_max) {
  Failures fails;
  parallel_for(1, n_max + 1, [&](i64 n) {
    for (i64 r = 1; r <= r_max; ++r) {
      for (i64 m = r * n; m < (r + 1) * n; ++m) {
        for (i64 d : divisors_up_to(m, n)) {
          const bool c1 = (d == n && m == r * n);
          const bool c2 = (d * (r + 1) == m);
          const bool c3 = (d * (r + 2) <= m);
          if (static_cast<int>(c1) + static_cast<int>(c2) + static_cast<int>(c3) != 1) {
            fails.add(n, "trichotomy not exclusive at n=" + std::to_string(n) +
                             " m=" + std::to_string(m) + " d=" + std::to_string(d));
            return;
          }
          const TopDivisorClass got = classify_top_divisor(d, m, n, r);
          const TopDivisorClass want = c1   ? TopDivisorClass::EqualsDegree
                                       : c2 ? TopDivisorClass::QuotientRPlus1
                                            : TopDivisorClass::QuotientAtLeastRPlus2;
          if (got != want) {
            fails.add(n, "classification mismatch at n=" + std::to_string(n) +
                             " m=" + std::to_string(m) + " d=" + std::to_string(d));
            return;
          }
        }
      }
    }
  });
  return make_result("top_divisor_trichotomy", fails,
                     "n <= " + std::to_string(n_max) + ", r <= " + std::to_string(r_max));
}

CheckResult check_boundary_pairs(i64 n_max, i64 r_max) {
  Failures fails;
  parallel_for(1, n_max + 1, [&](i64 n) {
    for (i64 r = 1; r <= r_max; ++r) {
      for (i64 m = r * n; m < (r + 1) * n; ++m) {
        std::vector<BoundaryPair> pairs;
        try {
          pairs = boundary_pairs(m, n, r);
        } catch (const std::logic_error& e) {
          fails.add(n, e.what());
          return;
        }
        // Completeness and hypotheses, re-derived independently.
        std::size_t expected = 0;
        const auto divs = divisors_of(m);
        for (std::size_t i = 0; i < divs.size(); ++i) {
          for (std::size_t j = i; j < divs.size(); ++j) {
            const i64 d1 = divs[i], d2 = divs[j];
            if (d1 * (r + 1) > m || d2 * (r + 1) > m) continue;
            if (d1 + d2 > n) continue;
            if (static_cast<__int128>(d1 + d2) * 2 * (r + 1) * (r + 2) <=
                static_cast<__int128>(m) * (2 * r + 3)) {
              continue;
            }
            ++expected;
          }
        }
        if (expected != pairs.size()) {
          fails.add(n, "boundary pair enumeration incomplete at n=" + std::to_string(n) +
                           " m=" + std::to_string(m) + " r=" + std::to_string(r));
          return;
        }
        for (const auto& p : pairs) {
          if (p.c1 * p.d1 != m || p.c2 * p.d2 != m || p.d1 > p.d2) {
            fails.add(n, "boundary pair malformed at n=" + std::to_string(n) +
                             " m=" + std::to_string(m));
            return;
          }
        }
      }
    }
  });
  return make_result("boundary_pair_pattern", fails,
                     "n <= " + std::to_string(n_max) + ", r <= " + std::to_string(r_max));
}

// ------------------------------------------------------------------ engine

// n in [3, 60], m in {n, n+7, 2n, 2n+3, 3n}, s = 3/4.
std::vector<std::pair<i64, i64>> identity_grid() {
  std::vector<std::pair<i64, i64>> grid;
  for (i64 n = 3; n <= 60; ++n) {
    for (i64 m : {n, n + 7, 2 * n, 2 * n + 3, 3 * n}) grid.emplace_back(n, m);
  }
  return grid;
}

CheckResult check_breakdown_identities() {
  Failures fails;
  const auto grid = identity_grid();
  parallel_for(0, static_cast<i64>(grid.size()), [&](i64 idx) {
    const auto [n, m] = grid[static_cast<std::size_t>(idx)];
    Engine engine;
    ProportionBreakdown b;
    try {
      b = engine.breakdown(n, m, kDefaultS);
    } catch (const std::exception& e) {
      fails.add(idx, e.what());
      return;
    }
    const std::string at = " at n=" + std::to_string(n) + " m=" + std::to_string(m);
    if (b.p0 != b.p0_1 + b.p0_2 + b.p0_3) fails.add(idx, "marked-point identity broken" + at);
    if (b.p_total != b.p0 + b.p1 + b.p2 + b.p3 + b.p_ge4) fails.add(idx, "strata sum broken" + at);
    const auto strata = engine.stratified_counts(n, m, kDefaultS);
    const Rat* parts[5] = {&b.p0, &b.p1, &b.p2, &b.p3, &b.p_ge4};
    for (int j = 0; j < 5; ++j) {
      if (*parts[j] != make_rat(strata[static_cast<std::size_t>(j)], factorial(n))) {
        fails.add(idx, "stratum " + std::to_string(j) + " formula/recurrence mismatch" + at);
      }
    }
    for (const Rat* p : {&b.p_total, &b.p0, &b.p0_1, &b.p0_2, &b.p0_3, &b.p1, &b.p2, &b.p3, &b.p_ge4}) {
      if (*p < 0 || *p > 1) fails.add(idx, "component outside [0,1]" + at);
    }
  });
  return make_result("breakdown_identities", fails,
                     std::to_string(grid.size()) + " grid points, exact equality");
}

CheckResult check_extensionality() {
  Failures fails;
  Engine engine;
  for (i64 n = 1; n <= 20; ++n) {
    for (i64 m = 1; m <= 40; ++m) {
      const i64 m2 = m * 101;  // no new divisors below 101 appear
      if (divisors_up_to(m, n) != divisors_up_to(m2, n)) {
        fails.add(n * 100 + m, "premise broken at n=" + std::to_string(n) + " m=" + std::to_string(m));
        continue;
      }
      if (engine.proportion(n, m) != engine.proportion(n, m2)) {
        fails.add(n * 100 + m, "same divisor set, different proportion at n=" + std::to_string(n) +
                                   " m=" + std::to_string(m));
      }
    }
  }
  if (engine.proportion(5, 7) != rat_of(1, 120) || engine.proportion(5, 49) != rat_of(1, 120)) {
    fails.add(0, "P(5,7) and P(5,49) should both be 1/120");
  }
  return make_result("proportion_extensionality", fails);
}

CheckResult check_monotonicity() {
  Failures fails;
  Engine engine;
  for (i64 n = 1; n <= 25 && !fails.any(); ++n) {
    for (i64 m = 1; m <= 40; ++m) {
      const Rat base = engine.proportion(n, m);
      for (i64 k : {2, 3, 5}) {
        if (base > engine.proportion(n, k * m)) {
          fails.add(n, "monotonicity broken at n=" + std::to_string(n) + " m=" +
                           std::to_string(m) + " k=" + std::to_string(k));
        }
      }
    }
  }
  return make_result("divisibility_monotonicity", fails);
}

CheckResult check_prime_case() {
  Failures fails;
  Engine engine;
  for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                83, 89, 97}) {
    const Rat expected = rat_of(1, p) + make_rat(Int(1), factorial(p));
    if (engine.proportion(p, p) != expected) {
      fails.add(p, "prime case broken at p=" + std::to_string(p));
    }
  }
  return make_result("prime_case", fails, "P(p,p) = 1/p + 1/p! for primes p <= 97");
}

CheckResult check_proportion_range() {
  Failures fails;
  Engine engine;
  for (i64 n = 1; n <= 20 && !fails.any(); ++n) {
    for (i64 m = 1; m <= 60; ++m) {
      const Rat p = engine.proportion(n, m);
      if (p <= 0 || p > 1) {
        fails.add(n, "proportion outside (0,1] at n=" + std::to_string(n) + " m=" + std::to_string(m));
        break;
      }
      bool all_divide = true;
      for (i64 i = 2; i <= n; ++i) {
        if (m % i != 0) {
          all_divide = false;
          break;
        }
      }
      if ((p == 1) != all_divide) {
        fails.add(n, "P = 1 characterization broken at n=" + std::to_string(n) +
                         " m=" + std::to_string(m));
        break;
      }
    }
  }
  Engine spot;
  if (spot.proportion(5, 60) != 1) fails.add(0, "P(5,60) should be 1");
  return make_result("proportion_range", fails);
}

CheckResult check_pge4_bound() {
  Failures fails;
  const auto grid = identity_grid();
  parallel_for(0, static_cast<i64>(grid.size()), [&](i64 idx) {
    const auto [n, m] = grid[static_cast<std::size_t>(idx)];
    Engine engine;
    const auto strata = engine.stratified_counts(n, m, kDefaultS);
    const Rat exact = make_rat(strata[4], factorial(n));
    if (engine.pge4_upper_bound(n, m, kDefaultS) < exact) {
      fails.add(idx, "4+ large-cycle bound below exact value at n=" + std::to_string(n) +
                         " m=" + std::to_string(m));
    }
  });
  Engine engine;
  const Rat bound = engine.pge4_upper_bound(32, 8, kDefaultS);
  const Rat exact = make_rat(engine.stratified_counts(32, 8, kDefaultS)[4], factorial(32));
  if (bound != rat_of(1, 98304) || exact != rat_of(1, 98304)) {
    fails.add(-1, "tightness at (32,8): bound=" + fmt_rat(bound) + " exact=" + fmt_rat(exact));
  }
  return make_result("pge4_upper_bound_dominates", fails, "tight at (32,8): 1/98304");
}

CheckResult check_bound_calibration() {
  Failures fails;
  const BoundContext ctx = BoundContext::calibrate(rat_of(1, 4), 10000);
  for (i64 k = 1; k <= 10000; ++k) {
    if (!ctx.covers(k)) {
      fails.add(k, "calibrated constant fails at k=" + std::to_string(k));
      break;
    }
  }
  const Rat c = ctx.c_delta();
  if (ctx.c_prime() != 2 * (1 + 3 * c + c * c)) fails.add(0, "derived constant formula broken");
  if (c <= 0) fails.add(0, "calibrated constant not positive");
  return make_result("bound_calibration", fails,
                     "c_delta = " + fmt_rat(c) + " ~= " + decimal_string(c, 6));
}

CheckResult check_p0_bound() {
  Failures fails;
  const BoundContext ctx = BoundContext::calibrate(rat_of(1, 4), 10000);
  parallel_for(10, 201, [&](i64 n) {
    Engine engine;
    for (i64 m : {n, 2 * n, 3 * n}) {
      Rat bound, exact;
      try {
        bound = engine.p0_bound(n, m, kDefaultS, ctx);
        exact = engine.p0_proportion(n, m, kDefaultS);
      } catch (const std::exception& e) {
        fails.add(n, e.what());
        return;
      }
      if (bound < exact) {
        fails.add(n, "no-large-cycle bound below exact value at n=" + std::to_string(n) +
                         " m=" + std::to_string(m));
      }
    }
  });
  {
    Engine engine;
    const Rat c = ctx.c_delta();
    const Rat expected = (1 + 3 * c + c * c) * rat_of(4) * rat_of(32) / rat_of(720);
    if (engine.p0_bound(10, 10, kDefaultS, ctx) != expected) {
      fails.add(-1, "closed form at (10,10) mismatched");
    }
    Rat prev = engine.p0_bound(10, 200, kDefaultS, ctx);
    for (i64 n = 11; n <= 200; ++n) {
      const Rat cur = engine.p0_bound(n, 200, kDefaultS, ctx);
      if (cur > prev) fails.add(-1, "bound not decreasing in n at n=" + std::to_string(n));
      prev = cur;
    }
  }
  return make_result("p0_bound_dominates", fails, "n in [10,200], m in {n,2n,3n}, s=3/4, delta=1/4");
}

// ------------------------------------------------------------------ oracle

CheckResult check_brute_ground_truth() {
  Failures fails;
  Engine engine;
  for (i64 n = 1; n <= 7; ++n) {
    for (i64 m = 1; m <= 30; ++m) {
      if (engine.proportion(n, m) != make_rat(brute_count(n, m), factorial(n))) {
        fails.add(n * 100 + m, "exhaustive mismatch at n=" + std::to_string(n) +
                                   " m=" + std::to_string(m));
      }
    }
  }
  return make_result("brute_force_ground_truth", fails, "n <= 7, m <= 30, 210 cells");
}

CheckResult check_oracle_equivalence() {
  Failures fails;
  std::vector<std::pair<i64, i64>> grid;
  for (i64 n = 1; n <= 25; ++n) {
    for (i64 m = n; m <= 3 * n; ++m) grid.emplace_back(n, m);
  }
  for (i64 n = 1; n <= 12; ++n) {
    for (i64 m = 1; m < n; ++m) grid.emplace_back(n, m);  // the sub-n range not covered above
  }
  parallel_for(0, static_cast<i64>(grid.size()), [&](i64 idx) {
    const auto [n, m] = grid[static_cast<std::size_t>(idx)];
    const CrosscheckReport report = crosscheck(n, m, kDefaultS);
    if (!report.pass) {
      fails.add(idx, "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": " +
                         report.first_discrepancy);
    }
  });
  return make_result("cycle_type_equivalence", fails,
                     std::to_string(grid.size()) + " crosschecks (types, strata, exhaustive)");
}

// ------------------------------------------------------------- asymptotics

CheckResult check_pair_set_T() {
  Failures fails;
  for (i64 r = 1; r <= 6; ++r) {
    for (i64 m = 1; m <= 600; ++m) {
      const PairSet set = pair_set(PairSetKind::T, r, m);
      if (set.coefficient < 0) fails.add(m, "negative coefficient");
      for (auto [i, j] : set.pairs) {
        if (std::find(set.pairs.begin(), set.pairs.end(), std::make_pair(j, i)) == set.pairs.end()) {
          fails.add(m, "pair set not swap-closed at r=" + std::to_string(r) + " m=" + std::to_string(m));
        }
      }
    }
  }
  for (i64 n = 2; n <= 300; ++n) {
    const Rat c = pair_set(PairSetKind::T, 1, n).coefficient;
    if (c != (n % 2 == 0 ? rat_of(2) : rat_of(0))) {
      fails.add(n, "c(1) parity value broken at n=" + std::to_string(n));
    }
  }
  // Members encode two cycle lengths summing exactly to n when m = rn.
  for (i64 r = 1; r <= 5; ++r) {
    for (i64 n = 2; n <= 300; ++n) {
      const i64 m = r * n;
      for (auto [i, j] : pair_set(PairSetKind::T, r, m).pairs) {
        if (m % (r + i) != 0 || m % (r + j) != 0 || m / (r + i) + m / (r + j) != n) {
          fails.add(n, "length-sum identity broken at r=" + std::to_string(r) +
                           " n=" + std::to_string(n) + " (i,j)=(" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
        }
      }
    }
  }
  return make_result("pair_set_T", fails, "swap symmetry, c(1) parity, length-sum identity");
}

CheckResult check_pair_set_Tprime() {
  Failures fails;
  for (i64 r = 1; r <= 6; ++r) {
    for (i64 m = 1; m <= 600; ++m) {
      const PairSet set = pair_set(PairSetKind::TPrime, r, m);
      if (set.coefficient < 0) fails.add(m, "negative coefficient");
      for (auto [i, j] : set.pairs) {
        if (std::find(set.pairs.begin(), set.pairs.end(), std::make_pair(j, i)) == set.pairs.end()) {
          fails.add(m, "pair set not swap-closed at r=" + std::to_string(r) + " m=" + std::to_string(m));
        }
      }
    }
  }
  for (i64 t : {2, 3}) {
    i64 tf = 1;
    for (i64 x = 2; x <= t; ++x) tf *= x;
    const i64 r = tf - 1;
    for (i64 n = t * tf + 1; n <= 300; ++n) {
      const i64 m = tf * (n - t);
      for (auto [i, j] : pair_set(PairSetKind::TPrime, r, m).pairs) {
        if (m % (r + i) != 0 || m % (r + j) != 0 || m / (r + i) + m / (r + j) != n - t) {
          fails.add(n, "length-sum identity broken at t=" + std::to_string(t) +
                           " n=" + std::to_string(n));
        }
      }
    }
  }
  {
    const PairSet set = pair_set(PairSetKind::TPrime, 1, 36);
    if (set.pairs != std::vector<std::pair<i64, i64>>{{3, 3}} || set.coefficient != 2) {
      fails.add(0, "T'(1) for m=36 should be {(3,3)} with coefficient 2");
    }
    for (i64 m = 1; m <= 100; ++m) {
      const Rat c = pair_set(PairSetKind::TPrime, 1, m).coefficient;
      if (c != (m % 4 == 0 ? rat_of(2) : rat_of(0))) {
        fails.add(m, "c'(1) divisibility value broken at m=" + std::to_string(m));
      }
    }
  }
  return make_result("pair_set_Tprime", fails, "swap symmetry, length-sum identity, c'(1) values");
}

CheckResult check_lower_bounds_rn() {
  Failures fails;
  parallel_for(4, 301, [&](i64 n) {
    Engine engine;
    for (i64 r = 1; r <= 4; ++r) {
      const LowerBoundCheck c = lower_bound_check(n, r * n, engine);
      if (!c.pass) {
        fails.add(n * 10 + r, "P(n,rn) below 1/n + c(r)/n^2 at n=" + std::to_string(n) +
                                  " r=" + std::to_string(r));
      }
    }
  });
  return make_result("lower_bounds_rn", fails, "n in [4,300], r in {1,2,3,4}, exact inequality");
}

CheckResult check_lower_bounds_tfact() {
  Failures fails;
  std::vector<std::pair<i64, i64>> grid;  // (t, n)
  for (i64 t : {2, 3}) {
    i64 tf = 1;
    for (i64 x = 2; x <= t; ++x) tf *= x;
    for (i64 n = t * tf + 1; n <= 300; ++n) grid.emplace_back(t, n);
  }
  std::atomic<i64> failures(0);
  parallel_for(0, static_cast<i64>(grid.size()), [&](i64 idx) {
    const auto [t, n] = grid[static_cast<std::size_t>(idx)];
    i64 tf = 1;
    for (i64 x = 2; x <= t; ++x) tf *= x;
    Engine engine;
    const LowerBoundCheck c = lower_bound_check(n, tf * (n - t), engine, t);
    if (!c.pass) {
      failures.fetch_add(1);
      fails.add(idx, "P(" + std::to_string(n) + "," + std::to_string(c.m) + ") = " +
                         fmt_rat(c.exact) + " < " + fmt_rat(c.lower) +
                         " = 1/(n-t) + c'/(n-t)^2 at t=" + std::to_string(t));
    }
  });
  std::string detail = "t in {2,3}, admissible n <= 300, exact inequality";
  if (failures.load() > 0) {
    CheckResult r = make_result("lower_bounds_tfact", fails);
    r.detail = std::to_string(failures.load()) + " of " + std::to_string(grid.size()) +
               " grid points fail: " + r.detail;
    return r;
  }
  return make_result("lower_bounds_tfact", fails, detail);
}

CheckResult check_residual_trend(const std::string& name, Family family,
                                 const std::vector<i64>& grid) {
  Failures fails;
  Engine engine;
  ErrorFit fit;
  try {
    fit = residual_scan(family, grid, engine);
  } catch (const std::exception& e) {
    fails.add(0, e.what());
    return make_result(name, fails);
  }
  for (const auto& [n, res] : fit.samples) {
    if (res < 0) fails.add(n, "negative residual at n=" + std::to_string(n));
  }
  if (fit.fitted_exponent > -2.4) {
    fails.add(1, "fitted exponent " + std::to_string(fit.fitted_exponent) + " above -2.4");
  }
  const auto& first = fit.samples.front();
  const auto& last = fit.samples.back();
  if (compare_scaled(last.second, last.first, first.second, first.first, 12, 5) > 0) {
    fails.add(2, "scaled residual grew from n=" + std::to_string(first.first) + " to n=" +
                     std::to_string(last.first));
  }
  std::ostringstream detail;
  detail << family.str() << ": exponent " << fit.fitted_exponent << ", scaled endpoints "
         << to_double(abs(first.second)) * std::pow(static_cast<double>(first.first), 2.4) << " -> "
         << to_double(abs(last.second)) * std::pow(static_cast<double>(last.first), 2.4);
  return make_result(name, fails, detail.str());
}

std::vector<i64> arithmetic_grid(i64 first, i64 last, i64 step) {
  std::vector<i64> grid;
  for (i64 n = first; n <= last; n += step) grid.push_back(n);
  return grid;
}

CheckResult check_tk_bounds(i64 n_max, i64 r_max) {
  Failures fails;
  parallel_for(1, n_max + 1, [&](i64 n) {
    for (i64 r = 1; r <= r_max; ++r) {
      const Rat k_bound = rat_of(4 * (r + 3) * (r + 3) * (r + 3) * (r + 3), r * r);
      for (i64 m = r * n; m < (r + 1) * n; ++m) {
        const TkStats tk = t_and_k(n, m, r);
        if (tk.t > r + 3 || tk.k > k_bound) {
          fails.add(n, "divisor-pair statistic exceeds its cap at n=" + std::to_string(n) +
                           " m=" + std::to_string(m) + " r=" + std::to_string(r));
          return;
        }
      }
    }
  });
  return make_result("tk_bounds", fails,
                     "t <= r+3 and k <= 4(r+3)^4/r^2 for n <= " + std::to_string(n_max) +
                         ", r <= " + std::to_string(r_max));
}

// Scaled excess (P - alpha'(r+1)/m - k/n^2) * n^1.5 must not trend upward:
// its maximum over the top decile of n stays below the maximum over the
// bottom decile. Structural caps are re-checked on the same sweep.
CheckResult check_theorem2_structure() {
  Failures fails;
  constexpr i64 kNMin = 2, kNMax = 200, kRMax = 4;
  constexpr i64 kBottomEnd = 21, kTopBegin = 181;  // deciles of [2, 200]

  struct ScaledMax {
    bool have = false;
    Rat excess;
    i64 n = 1;
    std::string where;
  };
  ScaledMax bottom, top;
  std::mutex merge_mu;

  auto merge = [&](ScaledMax& dst, const ScaledMax& src) {
    if (!src.have) return;
    if (!dst.have || compare_scaled(src.excess, src.n, dst.excess, dst.n, 3, 2) > 0) dst = src;
  };

  parallel_for(kNMin, kNMax + 1, [&](i64 n) {
    Engine engine;
    ScaledMax local;
    for (i64 r = 1; r <= kRMax; ++r) {
      const Rat k_bound = rat_of(4 * (r + 3) * (r + 3) * (r + 3) * (r + 3), r * r);
      for (i64 m = r * n + 1; m < (r + 1) * n; ++m) {
        const TkStats tk = t_and_k(n, m, r);
        if (tk.t > r + 3 || tk.k > k_bound) {
          fails.add(n, "structural cap broken at n=" + std::to_string(n) + " m=" + std::to_string(m));
          return;
        }
        const Regime rg = regime(n, m);
        Rat main = tk.k / (rat_of(n) * n);
        if (rg.alpha_prime) main += rat_of(r + 1, m);
        const Rat excess = engine.proportion(n, m) - main;
        if (!local.have || compare_scaled(excess, n, local.excess, local.n, 3, 2) > 0) {
          local.have = true;
          local.excess = excess;
          local.n = n;
          local.where = "n=" + std::to_string(n) + " m=" + std::to_string(m);
        }
      }
    }
    std::lock_guard<std::mutex> lock(merge_mu);
    if (n <= kBottomEnd) merge(bottom, local);
    if (n >= kTopBegin) merge(top, local);
  });

  std::ostringstream detail;
  if (!fails.any()) {
    if (!bottom.have || !top.have) {
      fails.add(0, "decile maxima unavailable");
    } else if (compare_scaled(top.excess, top.n, bottom.excess, bottom.n, 3, 2) > 0) {
      fails.add(1, "scaled excess grew: top decile (" + top.where + ") above bottom decile (" +
                       bottom.where + ")");
    } else {
      const double b = to_double(bottom.excess) * std::pow(static_cast<double>(bottom.n), 1.5);
      const double t = to_double(top.excess) * std::pow(static_cast<double>(top.n), 1.5);
      detail << "scaled excess max: bottom decile " << b << " (" << bottom.where << "), top decile "
             << t << " (" << top.where << ")";
    }
  }
  return make_result("bound_structure_trend", fails, detail.str());
}

CheckResult check_conditional() {
  Failures fails;
  parallel_for(4, 301, [&](i64 n) {
    Engine engine;
    for (i64 r = 1; r <= 4; ++r) {
      const Rat c = conditional_probability(n, r * n, 0, engine);
      if (c != rat_of(1, n) / engine.proportion(n, r * n)) {
        fails.add(n * 10 + r, "conditional formula broken at n=" + std::to_string(n) +
                                  " r=" + std::to_string(r));
      }
      if (c <= 0 || c > 1) {
        fails.add(n * 10 + r, "conditional outside (0,1] at n=" + std::to_string(n) +
                                  " r=" + std::to_string(r));
      }
    }
  });
  Engine engine;
  if (conditional_probability(4, 4, 0, engine) != rat_of(3, 8)) fails.add(0, "value at (4,4) != 3/8");
  if (conditional_probability(5, 5, 0, engine) != rat_of(24, 25)) fails.add(0, "value at (5,5) != 24/25");
  if (conditional_probability(6, 8, 2, engine) != rat_of(45, 64)) fails.add(0, "value at (6,8,t=2) != 45/64");
  if (conditional_probability(3, 3, 0, engine) != rat_of(2, 3)) fails.add(0, "value at (3,3) != 2/3");
  // Against literal enumeration: conditional = event count / order-count.
  for (i64 n = 3; n <= 7; ++n) {
    for (i64 r = 1; r <= 3; ++r) {
      const Rat via_brute = make_rat(brute_event_count(n, r * n, 0), brute_count(n, r * n));
      if (conditional_probability(n, r * n, 0, engine) != via_brute) {
        fails.add(n, "exhaustive disagreement at n=" + std::to_string(n) + " r=" + std::to_string(r));
      }
    }
  }
  for (i64 n = 5; n <= 8; ++n) {
    const i64 m = 2 * (n - 2);
    if (n <= 2 * 2 || m % (n - 2) != 0) continue;
    const Rat via_brute = make_rat(brute_event_count(n, m, 2), brute_count(n, m));
    if (conditional_probability(n, m, 2, engine) != via_brute) {
      fails.add(n, "exhaustive disagreement in the t=2 family at n=" + std::to_string(n));
    }
  }
  return make_result("conditional_probabilities", fails,
                     "grid n in [4,300], r <= 4; spot values 3/8, 24/25, 45/64");
}

// -------------------------------------------------------------- montecarlo

CheckResult check_mc_determinism() {
  Failures fails;
  const SampleEstimate one = estimate(50, 100, 300000, 42, 1);
  const SampleEstimate two = estimate(50, 100, 300000, 42, 2);
  const SampleEstimate any = estimate(50, 100, 300000, 42, 0);
  const SampleEstimate again = estimate(50, 100, 300000, 42, 1);
  if (one.hits != two.hits || one.hits != any.hits) fails.add(0, "hits depend on worker count");
  if (one.hits != again.hits) fails.add(1, "hits not reproducible for a fixed seed");
  SplitMix64 a(7), b(7);
  for (int rep = 0; rep < 5; ++rep) {
    if (sample_cycle_lengths(40, a) != sample_cycle_lengths(40, b)) {
      fails.add(2, "cycle-length sampling not reproducible");
    }
  }
  return make_result("mc_determinism", fails, "hits invariant under worker count and reruns");
}

CheckResult check_mc_single_point() {
  Failures fails;
  if (estimate(1, 5, 1000, 9).estimate != 1.0) fails.add(0, "P(1,m) estimate should be exactly 1");
  SplitMix64 rng(3);
  if (sample_cycle_lengths(1, rng) != std::vector<i64>{1}) fails.add(1, "single point must be a fixed point");
  return make_result("mc_single_point", fails);
}

CheckResult check_mc_type_frequencies() {
  Failures fails;
  constexpr u64 kSamples = 100000;
  SplitMix64 rng(12345);
  u64 counts[3] = {0, 0, 0};  // (1,1,1), (2,1), (3)
  for (u64 i = 0; i < kSamples; ++i) {
    const auto lengths = sample_cycle_lengths(3, rng);
    if (lengths.size() == 3) {
      ++counts[0];
    } else if (lengths.size() == 2) {
      ++counts[1];
    } else {
      ++counts[2];
    }
  }
  const double expected[3] = {1.0 / 6.0, 1.0 / 2.0, 1.0 / 3.0};
  for (int c = 0; c < 3; ++c) {
    const double freq = static_cast<double>(counts[c]) / kSamples;
    const double sigma = std::sqrt(expected[c] * (1 - expected[c]) / kSamples);
    if (std::fabs(freq - expected[c]) > 5 * sigma) {
      fails.add(c, "cycle-type frequency off by more than 5 sigma for class " + std::to_string(c));
    }
  }
  return make_result("mc_type_frequencies", fails, "S_3 type frequencies within 5 sigma");
}

CheckResult check_mc_fixed_points() {
  Failures fails;
  for (i64 n : {20, 100}) {
    const FixedPointStat stat = mean_fixed_points(n, 1000000, 777);
    if (std::fabs(stat.mean - 1.0) > 5 * stat.sigma_of_mean) {
      fails.add(n, "mean fixed points off 1 by more than 5 sigma at n=" + std::to_string(n));
    }
  }
  return make_result("mc_fixed_points", fails, "mean fixed points = 1 within 5 sigma");
}

CheckResult mc_seed_sweep(const std::string& name, const std::vector<std::pair<i64, i64>>& points,
                          u64 trials, int min_good) {
  Failures fails;
  std::ostringstream detail;
  Engine engine;
  for (const auto& [n, m] : points) {
    const double exact = to_double(engine.proportion(n, m));
    int good = 0;
    for (u64 seed = 1; seed <= 20; ++seed) {
      const SampleEstimate est = estimate(n, m, trials, seed);
      if (std::fabs(est.estimate - exact) <= 5 * est.std_error) ++good;
    }
    detail << "(" << n << "," << m << "): " << good << "/20 ";
    if (good < min_good) {
      fails.add(n, "only " + std::to_string(good) + "/20 seeds within 5 standard errors at n=" +
                       std::to_string(n) + " m=" + std::to_string(m));
    }
  }
  return make_result(name, fails, detail.str());
}

CheckResult check_mc_unbiasedness() {
  std::vector<std::pair<i64, i64>> points;
  for (i64 n : {20, 50, 100}) {
    points.emplace_back(n, n);
    points.emplace_back(n, 2 * n);
  }
  return mc_seed_sweep("mc_unbiasedness", points, 1000000, 19);
}

CheckResult check_mc_consistency() {
  return mc_seed_sweep("mc_consistency", {{20, 20}, {50, 100}, {100, 100}}, 1000000, 19);
}

// ---------------------------------------------------------------- criteria

CheckResult criterion_pinned_values() {
  Failures fails;
  for (const CheckResult& sub : {check_prime_case(), check_pge4_bound()}) {
    if (!sub.pass) fails.add(0, sub.name + ": " + sub.detail);
  }
  for (i64 n = 2; n <= 300; ++n) {
    const Rat c = pair_set(PairSetKind::T, 1, n).coefficient;
    if (c != (n % 2 == 0 ? rat_of(2) : rat_of(0))) {
      fails.add(n, "c(1) parity value broken at n=" + std::to_string(n));
    }
  }
  return make_result("pinned_values", fails, "c(1) parity, prime case, 4+ cycle bound with tight spot");
}

struct CriterionSpec {
  std::string name;
  double time_limit;  // seconds; 0 = none stated
  std::function<CheckResult()> run;
};

const std::vector<CriterionSpec>& criteria() {
  static const std::vector<CriterionSpec> list = {
      {"exhaustive ground truth (n<=7, m<=30)", 10.0, [] { return check_brute_ground_truth(); }},
      {"cycle-type oracle equivalence (n<=25)", 60.0, [] { return check_oracle_equivalence(); }},
      {"identity suite (n in [3,60])", 300.0, [] { return check_breakdown_identities(); }},
      {"pinned values (c(1), primes, 4+ bound)", 0.0, [] { return criterion_pinned_values(); }},
      {"exact lower bounds (rn and t!(n-t))", 0.0,
       [] {
         Failures fails;
         for (const CheckResult& sub : {check_lower_bounds_rn(), check_lower_bounds_tfact()}) {
           if (!sub.pass) fails.add(0, sub.name + ": " + sub.detail);
         }
         return make_result("exact_lower_bounds", fails);
       }},
      {"second-order residual trends", 600.0,
       [] {
         Failures fails;
         std::ostringstream detail;
         const CheckResult subs[] = {
             check_residual_trend("residual_trend_r1", Family{Family::Kind::rn, 1},
                                  arithmetic_grid(50, 400, 50)),
             check_residual_trend("residual_trend_r2", Family{Family::Kind::rn, 2},
                                  arithmetic_grid(50, 400, 50)),
             check_residual_trend("residual_trend_t2", Family{Family::Kind::tfact, 2},
                                  arithmetic_grid(52, 402, 50)),
         };
         for (const CheckResult& sub : subs) {
           if (!sub.pass) fails.add(0, sub.name + ": " + sub.detail);
           detail << "[" << sub.detail << "] ";
         }
         return make_result("residual_trends", fails, detail.str());
       }},
      {"upper-bound structure (n<=200, r<=4)", 0.0, [] { return check_theorem2_structure(); }},
      {"no-large-cycle bound (calibrated)", 0.0,
       [] {
         Failures fails;
         for (const CheckResult& sub : {check_bound_calibration(), check_p0_bound()}) {
           if (!sub.pass) fails.add(0, sub.name + ": " + sub.detail);
         }
         return make_result("p0_bound", fails);
       }},
      {"conditional probabilities", 0.0, [] { return check_conditional(); }},
      {"Monte Carlo consistency (20 seeds)", 300.0, [] { return check_mc_consistency(); }},
  };
  return list;
}

}  // namespace

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string SuiteReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.pass) return c.name + ": " + c.detail;
  }
  return {};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"identities", "oracle",  "thm1a",    "thm1b",
                                                 "thm2",       "lemma24", "corollary"};
  return names;
}

SuiteReport run_suite(const std::string& suite) {
  SuiteReport report;
  report.suite = suite;
  if (suite == "identities") {
    report.checks = {check_divisor_count(10000), check_divisor_split(), check_breakdown_identities(),
                     check_extensionality(),     check_monotonicity(),  check_prime_case(),
                     check_proportion_range(),   check_pge4_bound()};
  } else if (suite == "oracle") {
    report.checks = {check_brute_ground_truth(), check_oracle_equivalence(), check_mc_determinism(),
                     check_mc_single_point(),    check_mc_type_frequencies(), check_mc_fixed_points(),
                     check_mc_unbiasedness()};
  } else if (suite == "thm1a") {
    report.checks = {check_pair_set_T(), check_lower_bounds_rn(),
                     check_residual_trend("residual_trend_r1", Family{Family::Kind::rn, 1},
                                          arithmetic_grid(50, 400, 50)),
                     check_residual_trend("residual_trend_r2", Family{Family::Kind::rn, 2},
                                          arithmetic_grid(50, 400, 50))};
  } else if (suite == "thm1b") {
    report.checks = {check_pair_set_Tprime(), check_lower_bounds_tfact(),
                     check_residual_trend("residual_trend_t2", Family{Family::Kind::tfact, 2},
                                          arithmetic_grid(52, 402, 50))};
  } else if (suite == "thm2") {
    report.checks = {check_top_divisor_trichotomy(300, 5), check_boundary_pairs(300, 5),
                     check_tk_bounds(300, 5), check_theorem2_structure()};
  } else if (suite == "lemma24") {
    report.checks = {check_bound_calibration(), check_p0_bound()};
  } else if (suite == "corollary") {
    report.checks = {check_conditional()};
  } else {
    throw std::invalid_argument("unknown verification suite '" + suite + "'");
  }
  return report;
}

int criterion_count() { return static_cast<int>(criteria().size()); }

CriterionResult run_criterion(int index) {
  const auto& list = criteria();
  if (index < 1 || index > static_cast<int>(list.size())) {
    throw std::invalid_argument("criterion index out of range");
  }
  const CriterionSpec& spec = list[static_cast<std::size_t>(index - 1)];
  CriterionResult result;
  result.index = index;
  result.name = spec.name;
  const auto start = std::chrono::steady_clock::now();
  const CheckResult check = spec.run();
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.pass = check.pass;
  result.detail = check.detail;
  if (spec.time_limit > 0 && result.seconds >= spec.time_limit) {
    result.pass = false;
    result.detail = "runtime " + std::to_string(result.seconds) + "s exceeds the " +
                    std::to_string(spec.time_limit) + "s limit; " + result.detail;
  }
  return result;
}

}  // namespace permorder::checks
