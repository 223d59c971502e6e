#pragma once

#include <string_view>
#include <vector>

#include "permorder/rational.hpp"

namespace permorder {

/// Threshold exponent s = p/q with 1/2 < s < 1. A divisor d of m counts as
/// large when d >= m^s, decided by the exact integer test d^q >= m^p (ties
/// are large). Default is 3/4.
class ThresholdExponent {
 public:
  ThresholdExponent() : p_(3), q_(4) {}
  ThresholdExponent(i64 p, i64 q);

  i64 p() const { return p_; }
  i64 q() const { return q_; }
  Rat value() const { return rat_of(p_, q_); }

  bool is_large(i64 d, i64 m) const;

  /// Parses "P/Q", e.g. "3/4" or "2/3".
  static ThresholdExponent parse(std::string_view text);

  std::string str() const;

  friend bool operator==(const ThresholdExponent& a, const ThresholdExponent& b) {
    return a.p_ * b.q_ == b.p_ * a.q_;
  }

 private:
  i64 p_, q_;
};

/// The divisors of m that are at most n, partitioned at the m^s threshold.
struct DivisorSplit {
  i64 m = 0;
  i64 n = 0;
  ThresholdExponent s;
  std::vector<i64> small;  // d^q <  m^p, ascending
  std::vector<i64> large;  // d^q >= m^p, ascending

  std::vector<i64> all() const;  // small ∪ large, ascending
};

/// Divisors d of m with d <= n, ascending. n = 0 yields {}.
std::vector<i64> divisors_up_to(i64 m, i64 n);
std::vector<i64> divisors_of(i64 m);
i64 divisor_count(i64 m);

DivisorSplit split_small_large(i64 m, i64 n, ThresholdExponent s = {});

/// Where a divisor d <= n of m sits when rn <= m < (r+1)n: either d is n
/// itself (= m/r), or the next-largest possible quotient m/(r+1), or it is
/// already at most m/(r+2).
enum class TopDivisorClass {
  EqualsDegree,          // d = n = m/r
  QuotientRPlus1,        // d = m/(r+1)
  QuotientAtLeastRPlus2  // d <= m/(r+2)
};

TopDivisorClass classify_top_divisor(i64 d, i64 m, i64 n, i64 r);

/// A pair of divisors d1 <= d2 <= m/(r+1) whose sum lands in
/// (m(2r+3)/(2(r+1)(r+2)), n]; c1 = m/d1, c2 = m/d2. Such pairs are forced
/// into a narrow cofactor pattern: c2 <= 2r+3, and either
/// r+2 <= c2 <= c1 < 2(r+1)(r+2), or c2 = r+1 with c1 >= r(r+1).
struct BoundaryPair {
  i64 d1 = 0, d2 = 0;
  i64 c1 = 0, c2 = 0;
};

/// All BoundaryPairs of m for the regime rn <= m < (r+1)n, ascending by
/// (d1, d2). The cofactor pattern is asserted on every returned pair.
std::vector<BoundaryPair> boundary_pairs(i64 m, i64 n, i64 r);

}  // namespace permorder
