#include "permorder/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace permorder {

namespace {

void require_divisor_list(const std::vector<i64>& divisors) {
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (divisors[i] < 1 || (i > 0 && divisors[i] <= divisors[i - 1])) {
      throw std::invalid_argument("divisor list must be ascending, distinct, positive");
    }
  }
}

// Multiplies ff up from the falling factorial (k-1)!/(k-d_prev)! to
// (k-1)!/(k-d)! as the divisor loop advances from d_prev to d.
void advance_falling_factorial(Int& ff, i64 k, i64 d_prev, i64 d) {
  for (i64 x = k - d + 1; x <= k - d_prev; ++x) {
    mpz_mul_ui(ff.get_mpz_t(), ff.get_mpz_t(), static_cast<unsigned long>(x));
  }
}

}  // namespace

CycleCountTable CycleCountTable::build(std::vector<i64> divisors, i64 n) {
  require_divisor_list(divisors);
  if (n < 0) throw std::invalid_argument("count table: n >= 0 required");
  CycleCountTable t;
  t.divisors = std::move(divisors);
  t.counts.assign(1, Int(1));
  t.extend(n);
  return t;
}

void CycleCountTable::extend(i64 n) {
  for (i64 k = static_cast<i64>(counts.size()); k <= n; ++k) {
    Int row(0), ff(1);
    i64 d_prev = 1;
    for (i64 d : divisors) {
      if (d > k) break;
      advance_falling_factorial(ff, k, d_prev, d);
      d_prev = d;
      mpz_addmul(row.get_mpz_t(), ff.get_mpz_t(), counts[static_cast<std::size_t>(k - d)].get_mpz_t());
    }
    counts.push_back(std::move(row));
  }
}

Rat CycleCountTable::proportion_at(i64 k) const {
  return make_rat(counts.at(static_cast<std::size_t>(k)), factorial(k));
}

std::shared_ptr<const CycleCountTable> Engine::table(const std::vector<i64>& divisors, i64 n) {
  auto it = cache_.find(divisors);
  if (it == cache_.end()) {
    auto t = std::make_shared<CycleCountTable>(CycleCountTable::build(divisors, n));
    while (cache_.size() >= capacity_ && !eviction_order_.empty()) {
      cache_.erase(eviction_order_.front());
      eviction_order_.pop_front();
    }
    cache_.emplace(divisors, t);
    eviction_order_.push_back(divisors);
    return t;
  }
  it->second->extend(n);
  return it->second;
}

Int Engine::count_all_cycles_in(i64 n, const std::vector<i64>& divisors) {
  if (n < 0) throw std::invalid_argument("count_all_cycles_in: n >= 0 required");
  return table(divisors, n)->counts[static_cast<std::size_t>(n)];
}

Rat Engine::proportion(i64 n, i64 m) {
  if (n < 1 || m < 1) throw std::invalid_argument("proportion: n, m >= 1 required");
  return table(divisors_up_to(m, n), n)->proportion_at(n);
}

Rat Engine::p0_proportion(i64 n, i64 m, ThresholdExponent s) {
  if (n < 0 || m < 1) throw std::invalid_argument("p0_proportion: n >= 0, m >= 1 required");
  if (n == 0) return rat_of(1);
  return table(split_small_large(m, n, s).small, n)->proportion_at(n);
}

std::array<Int, 5> Engine::stratified_counts(i64 n, i64 m, ThresholdExponent s) {
  if (n < 1 || m < 1) throw std::invalid_argument("stratified_counts: n, m >= 1 required");
  const DivisorSplit split = split_small_large(m, n, s);
  const auto divisors = split.all();
  std::vector<bool> large(divisors.size());
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    large[i] = std::binary_search(split.large.begin(), split.large.end(), divisors[i]);
  }

  // rows[k][j] = permutations of k points, cycle lengths dividing m, with
  // exactly j large cycles (j = 4 means at least four). The cycle through
  // the smallest point has some length d, contributing (k-1)!/(k-d)! ways
  // for the cycle itself times the count for the remaining k-d points.
  std::vector<std::array<Int, 5>> rows(static_cast<std::size_t>(n) + 1);
  rows[0][0] = 1;
  for (i64 k = 1; k <= n; ++k) {
    auto& row = rows[static_cast<std::size_t>(k)];
    Int ff(1);
    i64 d_prev = 1;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const i64 d = divisors[i];
      if (d > k) break;
      advance_falling_factorial(ff, k, d_prev, d);
      d_prev = d;
      const auto& src = rows[static_cast<std::size_t>(k - d)];
      if (!large[i]) {
        for (int j = 0; j < 5; ++j) {
          mpz_addmul(row[j].get_mpz_t(), ff.get_mpz_t(), src[j].get_mpz_t());
        }
      } else {
        for (int j = 3; j >= 1; --j) {
          mpz_addmul(row[j].get_mpz_t(), ff.get_mpz_t(), src[j - 1].get_mpz_t());
        }
        mpz_addmul(row[4].get_mpz_t(), ff.get_mpz_t(), src[3].get_mpz_t());
        mpz_addmul(row[4].get_mpz_t(), ff.get_mpz_t(), src[4].get_mpz_t());
      }
    }
  }
  return rows[static_cast<std::size_t>(n)];
}

ProportionBreakdown Engine::breakdown(i64 n, i64 m, ThresholdExponent s) {
  if (n < 3) throw std::invalid_argument("breakdown: n >= 3 required (three marked points)");
  if (m < 1) throw std::invalid_argument("breakdown: m >= 1 required");

  const DivisorSplit split = split_small_large(m, n, s);
  const auto t_small = table(split.small, n);
  const auto t_all = table(split.all(), n);

  std::vector<Rat> p0_at(static_cast<std::size_t>(n) + 1);
  for (i64 k = 0; k <= n; ++k) p0_at[static_cast<std::size_t>(k)] = t_small->proportion_at(k);

  ProportionBreakdown b;
  b.n = n;
  b.m = m;
  b.s = s;
  b.p_total = t_all->proportion_at(n);

  // No large cycle: first-point recursion.
  {
    Rat sum(0);
    for (i64 d : split.small) {
      if (d > n) break;
      sum += p0_at[static_cast<std::size_t>(n - d)];
    }
    b.p0 = sum / n;
  }

  // Three-point split of the no-large-cycle part. All three formulas carry
  // the prefactor (n-3)!/n!.
  const Rat pre3 = make_rat(Int(1), Int(n) * (n - 1) * (n - 2));
  {
    Rat sum(0);
    for (i64 d : split.small) {
      if (d > n) break;
      if (d < 3) continue;
      sum += rat_of((d - 1) * (d - 2)) * p0_at[static_cast<std::size_t>(n - d)];
    }
    b.p0_1 = pre3 * sum;
  }
  {
    // weight[sigma] = sum of (d2 - 1) over ordered pairs (d1, d2) of small
    // divisors with d2 >= 2 and d1 + d2 = sigma.
    std::vector<i64> weight(static_cast<std::size_t>(n) + 1, 0);
    for (i64 d1 : split.small) {
      if (d1 >= n) break;
      for (i64 d2 : split.small) {
        if (d1 + d2 > n) break;
        if (d2 >= 2) weight[static_cast<std::size_t>(d1 + d2)] += d2 - 1;
      }
    }
    Rat sum(0);
    for (i64 sigma = 2; sigma <= n; ++sigma) {
      if (weight[static_cast<std::size_t>(sigma)] == 0) continue;
      sum += rat_of(weight[static_cast<std::size_t>(sigma)]) * p0_at[static_cast<std::size_t>(n - sigma)];
    }
    b.p0_2 = rat_of(3) * pre3 * sum;
  }
  {
    // pair_count -> triple_count by one more convolution with the small set.
    std::vector<i64> pairs(static_cast<std::size_t>(n) + 1, 0);
    for (i64 d1 : split.small) {
      if (d1 >= n) break;
      for (i64 d2 : split.small) {
        if (d1 + d2 > n) break;
        pairs[static_cast<std::size_t>(d1 + d2)] += 1;
      }
    }
    std::vector<i64> triples(static_cast<std::size_t>(n) + 1, 0);
    for (i64 d3 : split.small) {
      if (d3 > n) break;
      for (i64 sigma2 = 2; sigma2 + d3 <= n; ++sigma2) {
        triples[static_cast<std::size_t>(sigma2 + d3)] += pairs[static_cast<std::size_t>(sigma2)];
      }
    }
    Rat sum(0);
    for (i64 sigma = 3; sigma <= n; ++sigma) {
      if (triples[static_cast<std::size_t>(sigma)] == 0) continue;
      sum += rat_of(triples[static_cast<std::size_t>(sigma)]) * p0_at[static_cast<std::size_t>(n - sigma)];
    }
    b.p0_3 = pre3 * sum;
  }

  // Exactly one, two, three large cycles.
  {
    Rat sum(0);
    for (i64 d : split.large) {
      if (d > n) break;
      sum += make_rat(Int(1), Int(d)) * p0_at[static_cast<std::size_t>(n - d)];
    }
    b.p1 = sum;
  }
  {
    Rat sum(0);
    for (i64 d1 : split.large) {
      if (d1 > n) break;
      for (i64 d2 : split.large) {
        if (d1 + d2 > n) break;
        sum += make_rat(Int(1), Int(d1) * d2) * p0_at[static_cast<std::size_t>(n - d1 - d2)];
      }
    }
    b.p2 = sum / 2;
  }
  {
    Rat sum(0);
    for (i64 d1 : split.large) {
      if (d1 > n) break;
      for (i64 d2 : split.large) {
        if (d1 + d2 > n) break;
        for (i64 d3 : split.large) {
          if (d1 + d2 + d3 > n) break;
          sum += make_rat(Int(1), Int(d1) * d2 * d3) * p0_at[static_cast<std::size_t>(n - d1 - d2 - d3)];
        }
      }
    }
    b.p3 = sum / 6;
  }

  b.p_ge4 = b.p_total - b.p0 - b.p1 - b.p2 - b.p3;

  if (b.p0 != b.p0_1 + b.p0_2 + b.p0_3) {
    throw std::logic_error("breakdown: three-point split does not sum to p0 at n=" +
                           std::to_string(n) + " m=" + std::to_string(m));
  }
  const auto strata = stratified_counts(n, m, s);
  const Rat* by_large[5] = {&b.p0, &b.p1, &b.p2, &b.p3, &b.p_ge4};
  for (int j = 0; j < 5; ++j) {
    if (*by_large[j] != make_rat(strata[static_cast<std::size_t>(j)], factorial(n))) {
      throw std::logic_error("breakdown: stratum " + std::to_string(j) +
                             " disagrees with the stratified recurrence at n=" +
                             std::to_string(n) + " m=" + std::to_string(m));
    }
  }
  return b;
}

Rat Engine::pge4_upper_bound(i64 n, i64 m, ThresholdExponent s) {
  if (n < 1 || m < 1) throw std::invalid_argument("pge4_upper_bound: n, m >= 1 required");
  const DivisorSplit split = split_small_large(m, n, s);
  const auto t_all = table(split.all(), n);
  Rat sum(0);
  for (i64 d1 : split.large) {
    if (d1 > n) break;
    for (i64 d2 : split.large) {
      if (d1 + d2 > n) break;
      for (i64 d3 : split.large) {
        if (d1 + d2 + d3 > n) break;
        for (i64 d4 : split.large) {
          const i64 sigma = d1 + d2 + d3 + d4;
          if (sigma > n) break;
          sum += make_rat(Int(1), Int(d1) * d2 * d3 * d4) * t_all->proportion_at(n - sigma);
        }
      }
    }
  }
  return sum / 24;
}

BoundContext BoundContext::calibrate(const Rat& delta, i64 k_max) {
  if (sgn(delta) <= 0) throw std::invalid_argument("calibrate: delta > 0 required");
  if (k_max < 1) throw std::invalid_argument("calibrate: k_max >= 1 required");
  if (!delta.get_num().fits_slong_p() || !delta.get_den().fits_slong_p()) {
    throw std::invalid_argument("calibrate: delta too large");
  }
  const unsigned long a = static_cast<unsigned long>(delta.get_num().get_si());
  const unsigned long bq = static_cast<unsigned long>(delta.get_den().get_si());

  std::vector<i64> dcnt(static_cast<std::size_t>(k_max) + 1, 0);
  for (i64 d = 1; d <= k_max; ++d) {
    for (i64 k = d; k <= k_max; k += d) dcnt[static_cast<std::size_t>(k)] += 1;
  }

  // argmax of d(k)^bq / k^a (equivalently d(k) / k^delta), exact comparisons
  i64 best_k = 1;
  for (i64 k = 2; k <= k_max; ++k) {
    Int lhs, rhs, ka, kb;
    mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(dcnt[static_cast<std::size_t>(k)]), bq);
    mpz_ui_pow_ui(ka.get_mpz_t(), static_cast<unsigned long>(best_k), a);
    lhs *= ka;
    mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(dcnt[static_cast<std::size_t>(best_k)]), bq);
    mpz_ui_pow_ui(kb.get_mpz_t(), static_cast<unsigned long>(k), a);
    rhs *= kb;
    if (lhs > rhs) best_k = k;
  }

  // Smallest p/10^6 with (p/10^6)^bq >= d(best_k)^bq / best_k^a.
  const Int scale = Int(1000000);
  Int scale_pow, db, ka;
  mpz_pow_ui(scale_pow.get_mpz_t(), scale.get_mpz_t(), bq);
  mpz_ui_pow_ui(db.get_mpz_t(), static_cast<unsigned long>(dcnt[static_cast<std::size_t>(best_k)]), bq);
  mpz_ui_pow_ui(ka.get_mpz_t(), static_cast<unsigned long>(best_k), a);
  Int target;
  mpz_cdiv_q(target.get_mpz_t(), Int(db * scale_pow).get_mpz_t(), ka.get_mpz_t());
  const Int p = root_ceil(target, bq);

  BoundContext ctx;
  ctx.delta_ = delta;
  ctx.c_delta_ = make_rat(p, scale);
  ctx.c_prime_ = 2 * (1 + 3 * ctx.c_delta_ + ctx.c_delta_ * ctx.c_delta_);
  ctx.k_max_ = k_max;

  // Re-verify the sweep: c_delta^bq * k^a >= d(k)^bq for every k.
  Int cb;
  mpz_pow_ui(cb.get_mpz_t(), p.get_mpz_t(), bq);
  for (i64 k = 1; k <= k_max; ++k) {
    Int kc, dkb;
    mpz_ui_pow_ui(kc.get_mpz_t(), static_cast<unsigned long>(k), a);
    mpz_ui_pow_ui(dkb.get_mpz_t(), static_cast<unsigned long>(dcnt[static_cast<std::size_t>(k)]), bq);
    if (cb * kc < dkb * scale_pow) {
      throw std::logic_error("calibrate: sweep verification failed at k=" + std::to_string(k));
    }
  }
  return ctx;
}

bool BoundContext::covers(i64 m) const {
  if (m < 1) return false;
  const unsigned long a = static_cast<unsigned long>(delta_.get_num().get_si());
  const unsigned long bq = static_cast<unsigned long>(delta_.get_den().get_si());
  Int lhs, rhs, ma, cb, db;
  mpz_ui_pow_ui(db.get_mpz_t(), static_cast<unsigned long>(divisor_count(m)), bq);
  mpz_pow_ui(cb.get_mpz_t(), c_delta_.get_num().get_mpz_t(), bq);
  mpz_ui_pow_ui(ma.get_mpz_t(), static_cast<unsigned long>(m), a);
  Int den_pow;
  mpz_pow_ui(den_pow.get_mpz_t(), c_delta_.get_den().get_mpz_t(), bq);
  lhs = db * den_pow;
  rhs = cb * ma;
  return lhs <= rhs;
}

Rat Engine::p0_bound(i64 n, i64 m, ThresholdExponent s, const BoundContext& ctx) {
  if (n < 3) throw std::invalid_argument("p0_bound: n >= 3 required");
  if (m < n) throw std::invalid_argument("p0_bound: m >= n required");
  if (ctx.delta() > s.value() - rat_of(1, 2)) {
    throw std::invalid_argument("p0_bound: delta must be at most s - 1/2");
  }
  if (!ctx.covers(m)) {
    throw std::domain_error("p0_bound: m escapes the calibrated divisor-count bound");
  }
  const Rat c = ctx.c_delta();
  const Rat factor = 1 + 3 * c + c * c;
  const Int m2s = pow_ceil(m, 2 * s.p(), s.q());
  return factor * rat_of(divisor_count(m)) * Rat(m2s) / Rat(Int(n) * (n - 1) * (n - 2));
}

}  // namespace permorder
