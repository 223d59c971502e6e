#pragma once

#include <array>
#include <deque>
#include <map>
#include <memory>
#include <vector>

#include "permorder/divisors.hpp"
#include "permorder/rational.hpp"

namespace permorder {

/// counts[k] = number of permutations of k points all of whose cycle lengths
/// lie in `divisors`. counts[0] = 1 (the empty permutation), and
///   counts[k] = sum over d in divisors, d <= k, of (k-1)!/(k-d)! * counts[k-d],
/// which is division-free, so every entry stays an exact integer <= k!.
struct CycleCountTable {
  std::vector<i64> divisors;  // ascending, distinct, >= 1
  std::vector<Int> counts;    // size n+1

  static CycleCountTable build(std::vector<i64> divisors, i64 n);
  void extend(i64 n);

  /// counts[k] / k!, the proportion within S_k.
  Rat proportion_at(i64 k) const;
};

/// P(n,m) split by the number of large cycles (0,1,2,3,>=4) and, within the
/// no-large-cycle part, by how the marked points 1,2,3 spread over cycles.
struct ProportionBreakdown {
  i64 n = 0;
  i64 m = 0;
  ThresholdExponent s;
  Rat p_total;
  Rat p0, p0_1, p0_2, p0_3;  // p0 = p0_1 + p0_2 + p0_3
  Rat p1, p2, p3, p_ge4;     // p_total = p0 + p1 + p2 + p3 + p_ge4
};

/// Calibrated constants for the explicit upper bound on the no-large-cycle
/// proportion: c_delta is a rational with d(k) <= c_delta * k^delta verified
/// for every k up to the calibration limit, and c_prime = 2(1+3c+c^2).
class BoundContext {
 public:
  static BoundContext calibrate(const Rat& delta, i64 k_max);

  const Rat& delta() const { return delta_; }
  const Rat& c_delta() const { return c_delta_; }
  const Rat& c_prime() const { return c_prime_; }
  i64 calibration_limit() const { return k_max_; }

  /// True iff d(m) <= c_delta * m^delta, checked exactly for this m.
  bool covers(i64 m) const;

 private:
  BoundContext() = default;
  Rat delta_, c_delta_, c_prime_;
  i64 k_max_ = 0;
};

/// Exact computation context. Holds a bounded cache of count tables keyed by
/// divisor list (the divisor set, not m itself, determines the table). Not
/// thread-safe: confine one Engine per thread.
class Engine {
 public:
  Engine() = default;
  explicit Engine(std::size_t cache_capacity) : capacity_(cache_capacity) {}

  /// Number of permutations of n points with all cycle lengths in `divisors`.
  Int count_all_cycles_in(i64 n, const std::vector<i64>& divisors);

  /// P(n,m): proportion of permutations in S_n whose order divides m.
  Rat proportion(i64 n, i64 m);

  /// Proportion with all cycle lengths small divisors of m.
  Rat p0_proportion(i64 n, i64 m, ThresholdExponent s = {});

  /// Counts of order-dividing-m permutations with exactly 0,1,2,3 and >= 4
  /// large cycles, via an independent two-dimensional recurrence.
  std::array<Int, 5> stratified_counts(i64 n, i64 m, ThresholdExponent s = {});

  /// Full breakdown by the summation formulas; cross-validated against
  /// stratified_counts internally (throws std::logic_error on any mismatch).
  /// Requires n >= 3.
  ProportionBreakdown breakdown(i64 n, i64 m, ThresholdExponent s = {});

  /// Upper bound for the >= 4 large cycles stratum:
  /// (1/24) * sum over ordered 4-tuples of large divisors with sum <= n of
  /// P(n - sum, m) / (d1 d2 d3 d4).
  Rat pge4_upper_bound(i64 n, i64 m, ThresholdExponent s = {});

  /// Certified upper bound for p0:
  /// (1 + 3c + c^2) * d(m) * ceil(m^(2s)) / (n(n-1)(n-2)), requires
  /// m >= n >= 3, delta <= s - 1/2 and ctx.covers(m).
  Rat p0_bound(i64 n, i64 m, ThresholdExponent s, const BoundContext& ctx);

  /// Shared count table for a divisor list, grown to cover index n.
  std::shared_ptr<const CycleCountTable> table(const std::vector<i64>& divisors, i64 n);

 private:
  std::size_t capacity_ = 64;
  std::map<std::vector<i64>, std::shared_ptr<CycleCountTable>> cache_;
  std::deque<std::vector<i64>> eviction_order_;
};

}  // namespace permorder
