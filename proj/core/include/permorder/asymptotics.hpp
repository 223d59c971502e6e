#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permorder/engine.hpp"
#include "permorder/rational.hpp"

namespace permorder {

/// Two published variants of the alpha' threshold exist; the `definition`
/// denominator 2(r+1)(r+2)-1 is normative here, the `remark` variant
/// 2(r+1)(r+2) is kept for comparison.
enum class AlphaPrimeRule { definition, remark };

/// Position of (n, m) with m >= n: the unique r with rn <= m < (r+1)n plus
/// the indicator coefficients of the two possible leading terms.
struct Regime {
  i64 n = 0, m = 0, r = 0;
  bool alpha = false;        // m = rn exactly
  bool alpha_prime = false;  // (r+1) | m and n - m/(r+1) below the threshold
};

Regime regime(i64 n, i64 m, AlphaPrimeRule rule = AlphaPrimeRule::definition);

/// t(r,m,n): divisors d of m in [m/(2r+3), m/(r+1)] admitting a partner
/// divisor d0 with d + d0 <= n and m/(2(r+1)(r+2)) < d0 <= d.
/// k(r,m,n) = t * 2(r+1)(r+2)(2r+3)/r^2, bounded by 4(r+3)^4/r^2.
struct TkStats {
  i64 t = 0;
  Rat k;
  Rat k_bound;
};
TkStats t_and_k(i64 n, i64 m, i64 r);

/// Index pairs of the two-long-cycle contributions. Kind T: ij = r^2 with
/// 1 <= i,j <= r^2; kind TPrime: (i-1)(j-1) = (r+1)^2 with 1 < i,j <= (r+1)^2.
/// Both require r+i and r+j to divide m, and both are swap-closed.
enum class PairSetKind { T, TPrime };

struct PairSet {
  PairSetKind kind = PairSetKind::T;
  i64 r = 0, m = 0;
  std::vector<std::pair<i64, i64>> pairs;  // ordered pairs, lexicographic
  Rat coefficient;                          // c(r) or c'(r)
};

PairSet pair_set(PairSetKind kind, i64 r, i64 m);

enum class PredictionForm {
  leading_rn,     // m = rn:        1/n + c(r)/n^2
  leading_tfact,  // m = t!(n-t):   1/(n-t) + c'(r)/(n-t)^2
  upper_bound     // otherwise:     alpha'(r+1)/m + k(r,m,n)/n^2, a bound
};

struct AsymptoticPrediction {
  Regime regime;
  TkStats tk;
  PairSet pairs;
  Rat coefficient;
  PredictionForm form = PredictionForm::upper_bound;
  std::optional<i64> family_t;  // the t of the factorial family, when detected
  Rat predicted;
  Rat exact;
  Rat residual;  // exact - predicted
};

/// Detects the family of (n, m) and evaluates the matching second-order
/// prediction (or upper bound) together with the exact value. A t_hint pins
/// the factorial family; it is validated against m = t!(n-t).
AsymptoticPrediction predict(i64 n, i64 m, Engine& engine,
                             std::optional<i64> t_hint = std::nullopt,
                             AlphaPrimeRule rule = AlphaPrimeRule::definition);

/// The two exact inequalities behind the leading families:
/// P(n, rn) >= 1/n + c(r)/n^2 and P(n, t!(n-t)) >= 1/(n-t) + c'(r)/(n-t)^2.
struct LowerBoundCheck {
  i64 n = 0, m = 0;
  Rat exact;
  Rat lower;
  bool pass = false;
};
LowerBoundCheck lower_bound_check(i64 n, i64 m, Engine& engine,
                                  std::optional<i64> t_hint = std::nullopt);

/// Families n -> m for residual scans and tables.
struct Family {
  enum class Kind { rn, tfact } kind = Kind::rn;
  i64 param = 1;  // r for rn, t for tfact

  i64 m_for(i64 n) const;
  bool admissible(i64 n) const;
  std::string str() const;
};

/// Least-squares fit of log |residual| against log n over a family grid.
struct ErrorFit {
  std::string family;
  std::vector<std::pair<i64, Rat>> samples;  // (n, residual), all grid points
  int used = 0;                              // nonzero residuals entering the fit
  double fitted_exponent = 0.0;              // slope of the log-log fit
  double fitted_log_constant = 0.0;          // intercept (natural log)
  double max_scaled = 0.0;                   // max over grid of |residual| * n^2.4
  i64 max_scaled_n = 0;
};

/// Requires at least 5 grid points with nonzero residuals.
ErrorFit residual_scan(Family family, const std::vector<i64>& n_grid, Engine& engine);

/// Conditional probability that a uniform element of S_n contains an
/// (n-t)-cycle (t = 0: is an n-cycle) given that its order divides m.
/// Equals (1/(n-t)) / P(n,m); requires the event to imply the condition,
/// i.e. (n-t) | m and lcm(1..t) | m, plus n > 2t so that the event
/// probability is exactly 1/(n-t).
Rat conditional_probability(i64 n, i64 m, i64 t, Engine& engine);

}  // namespace permorder
