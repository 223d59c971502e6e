#include "permorder/asymptotics.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace permorder {

namespace {

i64 factorial_i64(i64 t) {
  i64 f = 1;
  for (i64 x = 2; x <= t; ++x) f *= x;
  return f;
}

i64 lcm_up_to(i64 t) {
  i64 l = 1;
  for (i64 x = 2; x <= t; ++x) l = std::lcm(l, x);
  return l;
}

// Smallest t in [2, 7] with m = t!(n - t) and n > t*t!, if any.
std::optional<i64> detect_factorial_family(i64 n, i64 m) {
  for (i64 t = 2; t <= 7; ++t) {
    const i64 tf = factorial_i64(t);
    if (n > t * tf && m == tf * (n - t)) return t;
  }
  return std::nullopt;
}

}  // namespace

Regime regime(i64 n, i64 m, AlphaPrimeRule rule) {
  if (n < 1) throw std::invalid_argument("regime: n >= 1 required");
  if (m < n) throw std::invalid_argument("regime: m >= n required");
  Regime rg;
  rg.n = n;
  rg.m = m;
  rg.r = m / n;
  rg.alpha = (m == rg.r * n);
  if (m % (rg.r + 1) == 0) {
    const i64 quot = m / (rg.r + 1);
    const i64 denom = 2 * (rg.r + 1) * (rg.r + 2) - (rule == AlphaPrimeRule::definition ? 1 : 0);
    // n - m/(r+1) < m/denom, cross-multiplied
    rg.alpha_prime = static_cast<__int128>(n - quot) * denom < static_cast<__int128>(m);
  }
  return rg;
}

TkStats t_and_k(i64 n, i64 m, i64 r) {
  if (r < 1 || n < 1) throw std::invalid_argument("t_and_k: n, r >= 1 required");
  if (!(r * n <= m && m < (r + 1) * n)) {
    throw std::invalid_argument("t_and_k: rn <= m < (r+1)n violated");
  }
  const auto divisors = divisors_of(m);
  i64 t = 0;
  for (i64 d : divisors) {
    // m/(2r+3) <= d <= m/(r+1)
    if (d * (2 * r + 3) < m || d * (r + 1) > m) continue;
    for (i64 d0 : divisors) {
      if (d0 > d) break;
      if (d + d0 > n) break;
      // d0 > m / (2(r+1)(r+2))
      if (static_cast<__int128>(d0) * 2 * (r + 1) * (r + 2) > static_cast<__int128>(m)) {
        ++t;
        break;
      }
    }
  }
  TkStats stats;
  stats.t = t;
  stats.k = rat_of(t) * rat_of(2 * (r + 1) * (r + 2) * (2 * r + 3), r * r);
  stats.k_bound = rat_of(4 * (r + 3) * (r + 3) * (r + 3) * (r + 3), r * r);
  return stats;
}

PairSet pair_set(PairSetKind kind, i64 r, i64 m) {
  if (r < 1 || m < 1) throw std::invalid_argument("pair_set: r, m >= 1 required");
  PairSet set;
  set.kind = kind;
  set.r = r;
  set.m = m;
  set.coefficient = rat_of(0);
  if (kind == PairSetKind::T) {
    const i64 square = r * r;
    for (i64 i = 1; i <= square; ++i) {
      if (square % i != 0) continue;
      const i64 j = square / i;
      if (j > square) continue;
      if (m % (r + i) != 0 || m % (r + j) != 0) continue;
      set.pairs.emplace_back(i, j);
      set.coefficient += 1 + rat_of(i + j, 2 * r);
    }
  } else {
    const i64 square = (r + 1) * (r + 1);
    for (i64 i = 2; i <= square; ++i) {
      if (square % (i - 1) != 0) continue;
      const i64 j = square / (i - 1) + 1;
      if (j <= 1 || j > square) continue;
      if (m % (r + i) != 0 || m % (r + j) != 0) continue;
      set.pairs.emplace_back(i, j);
      set.coefficient += 1 + rat_of(i + j - 2, 2 * (r + 1));
    }
  }
  return set;
}

AsymptoticPrediction predict(i64 n, i64 m, Engine& engine, std::optional<i64> t_hint,
                             AlphaPrimeRule rule) {
  AsymptoticPrediction pred;
  pred.regime = regime(n, m, rule);
  const i64 r = pred.regime.r;
  pred.tk = t_and_k(n, m, r);

  std::optional<i64> family_t = t_hint;
  if (family_t) {
    const i64 t = *family_t;
    if (t < 2 || t > 7 || factorial_i64(t) * (n - t) != m || n <= t * factorial_i64(t)) {
      throw std::invalid_argument("predict: m != t!(n-t) for the requested t");
    }
  } else if (!pred.regime.alpha) {
    family_t = detect_factorial_family(n, m);
  }

  if (pred.regime.alpha) {
    pred.form = PredictionForm::leading_rn;
    pred.pairs = pair_set(PairSetKind::T, r, m);
    pred.coefficient = pred.pairs.coefficient;
    pred.predicted = rat_of(1, n) + pred.coefficient / (rat_of(n) * n);
  } else if (family_t) {
    pred.form = PredictionForm::leading_tfact;
    pred.family_t = family_t;
    pred.pairs = pair_set(PairSetKind::TPrime, r, m);
    pred.coefficient = pred.pairs.coefficient;
    const i64 base = n - *family_t;
    pred.predicted = rat_of(1, base) + pred.coefficient / (rat_of(base) * base);
  } else {
    pred.form = PredictionForm::upper_bound;
    pred.pairs = pair_set(PairSetKind::T, r, m);
    pred.coefficient = pred.pairs.coefficient;
    pred.predicted = pred.tk.k / (rat_of(n) * n);
    if (pred.regime.alpha_prime) pred.predicted += rat_of(r + 1, m);
  }

  pred.exact = engine.proportion(n, m);
  pred.residual = pred.exact - pred.predicted;
  return pred;
}

LowerBoundCheck lower_bound_check(i64 n, i64 m, Engine& engine, std::optional<i64> t_hint) {
  std::optional<i64> family_t = t_hint;
  if (!family_t && m % n != 0) family_t = detect_factorial_family(n, m);
  if (!family_t && m % n != 0) {
    throw std::invalid_argument("lower_bound_check: (n, m) lies in neither leading family");
  }

  LowerBoundCheck check;
  check.n = n;
  check.m = m;
  if (family_t) {
    const i64 t = *family_t;
    const i64 tf = factorial_i64(t);
    if (tf * (n - t) != m || n <= t * tf) {
      throw std::invalid_argument("lower_bound_check: m != t!(n-t) for the requested t");
    }
    const i64 base = n - t;
    const PairSet set = pair_set(PairSetKind::TPrime, tf - 1, m);
    check.lower = rat_of(1, base) + set.coefficient / (rat_of(base) * base);
  } else {
    const PairSet set = pair_set(PairSetKind::T, m / n, m);
    check.lower = rat_of(1, n) + set.coefficient / (rat_of(n) * n);
  }
  check.exact = engine.proportion(n, m);
  check.pass = check.exact >= check.lower;
  return check;
}

i64 Family::m_for(i64 n) const {
  return kind == Kind::rn ? param * n : factorial_i64(param) * (n - param);
}

bool Family::admissible(i64 n) const {
  if (kind == Kind::rn) return n >= 1;
  return n > param * factorial_i64(param);
}

std::string Family::str() const {
  if (kind == Kind::rn) return "m=" + std::to_string(param) + "n";
  return "m=" + std::to_string(param) + "!(n-" + std::to_string(param) + ")";
}

ErrorFit residual_scan(Family family, const std::vector<i64>& n_grid, Engine& engine) {
  ErrorFit fit;
  fit.family = family.str();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  bool have_max = false;
  for (i64 n : n_grid) {
    if (!family.admissible(n)) {
      throw std::invalid_argument("residual_scan: inadmissible grid point n=" + std::to_string(n));
    }
    const i64 m = family.m_for(n);
    const std::optional<i64> hint =
        family.kind == Family::Kind::tfact ? std::optional<i64>(family.param) : std::nullopt;
    const AsymptoticPrediction p = predict(n, m, engine, hint);
    if (p.form == PredictionForm::upper_bound) {
      throw std::logic_error("residual_scan: grid point escaped its leading family");
    }
    fit.samples.emplace_back(n, p.residual);
    if (p.residual != 0) {
      const double x = std::log(static_cast<double>(n));
      const double y = std::log(std::fabs(to_double(p.residual)));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++fit.used;
    }
    const double scaled = std::fabs(to_double(p.residual)) * std::pow(static_cast<double>(n), 2.4);
    if (!have_max || scaled > fit.max_scaled) {
      fit.max_scaled = scaled;
      fit.max_scaled_n = n;
      have_max = true;
    }
  }
  if (fit.used < 5) {
    throw std::invalid_argument("residual_scan: need at least 5 nonzero residuals, have " +
                                std::to_string(fit.used));
  }
  const double k = fit.used;
  const double denom = k * sxx - sx * sx;
  fit.fitted_exponent = (k * sxy - sx * sy) / denom;
  fit.fitted_log_constant = (sy - fit.fitted_exponent * sx) / k;
  return fit;
}

Rat conditional_probability(i64 n, i64 m, i64 t, Engine& engine) {
  if (n < 1 || m < 1 || t < 0) throw std::invalid_argument("conditional: n, m >= 1 and t >= 0 required");
  if (n <= 2 * t) {
    throw std::invalid_argument("conditional: n > 2t required for the event probability 1/(n-t)");
  }
  const i64 cycle = n - t;
  if (m % cycle != 0) {
    throw std::invalid_argument("conditional: (n-t) must divide m, else the event does not imply the condition");
  }
  if (t >= 2 && m % lcm_up_to(t) != 0) {
    throw std::invalid_argument("conditional: lcm(1..t) must divide m, else the event does not imply the condition");
  }
  return rat_of(1, cycle) / engine.proportion(n, m);
}

}  // namespace permorder
