#include "permorder/divisors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <string>

namespace permorder {

ThresholdExponent::ThresholdExponent(i64 p, i64 q) : p_(p), q_(q) {
  if (p < 0 || q < 1) throw std::invalid_argument("threshold exponent: p >= 0 and q >= 1 required");
  // 1/2 < p/q < 1
  if (!(2 * p > q && p < q)) {
    throw std::invalid_argument("threshold exponent must lie strictly between 1/2 and 1");
  }
  const i64 g = std::gcd(p_, q_);
  p_ /= g;
  q_ /= g;
}

bool ThresholdExponent::is_large(i64 d, i64 m) const {
  if (d < 1 || m < 1) throw std::invalid_argument("is_large: positive d, m required");
  Int dq, mp;
  mpz_ui_pow_ui(dq.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(q_));
  mpz_ui_pow_ui(mp.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(p_));
  return dq >= mp;
}

ThresholdExponent ThresholdExponent::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw std::invalid_argument("threshold exponent: expected P/Q, got '" + std::string(text) + "'");
  }
  auto parse_int = [&](std::string_view part) {
    i64 v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size()) {
      throw std::invalid_argument("threshold exponent: bad integer '" + std::string(part) + "'");
    }
    return v;
  };
  return ThresholdExponent(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string ThresholdExponent::str() const {
  return std::to_string(p_) + "/" + std::to_string(q_);
}

std::vector<i64> DivisorSplit::all() const {
  std::vector<i64> merged;
  merged.reserve(small.size() + large.size());
  std::merge(small.begin(), small.end(), large.begin(), large.end(), std::back_inserter(merged));
  return merged;
}

std::vector<i64> divisors_up_to(i64 m, i64 n) {
  if (m < 1) throw std::invalid_argument("divisors_up_to: m >= 1 required");
  if (n < 0) throw std::invalid_argument("divisors_up_to: n >= 0 required");
  std::vector<i64> low, high;
  for (i64 d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    if (d <= n) low.push_back(d);
    const i64 e = m / d;
    if (e != d && e <= n) high.push_back(e);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::vector<i64> divisors_of(i64 m) { return divisors_up_to(m, m); }

i64 divisor_count(i64 m) {
  if (m < 1) throw std::invalid_argument("divisor_count: m >= 1 required");
  i64 count = 0;
  for (i64 d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    count += (d * d == m) ? 1 : 2;
  }
  return count;
}

DivisorSplit split_small_large(i64 m, i64 n, ThresholdExponent s) {
  if (m < 1 || n < 1) throw std::invalid_argument("split_small_large: m, n >= 1 required");
  DivisorSplit split;
  split.m = m;
  split.n = n;
  split.s = s;
  for (i64 d : divisors_up_to(m, n)) {
    (s.is_large(d, m) ? split.large : split.small).push_back(d);
  }
  return split;
}

namespace {

void require_regime(i64 m, i64 n, i64 r, const char* who) {
  if (n < 1 || r < 1) throw std::invalid_argument(std::string(who) + ": n, r >= 1 required");
  if (!(r * n <= m && m < (r + 1) * n)) {
    throw std::invalid_argument(std::string(who) + ": rn <= m < (r+1)n violated");
  }
}

}  // namespace

TopDivisorClass classify_top_divisor(i64 d, i64 m, i64 n, i64 r) {
  require_regime(m, n, r, "classify_top_divisor");
  if (d < 1 || m % d != 0) throw std::invalid_argument("classify_top_divisor: d must divide m");
  if (d > n) throw std::invalid_argument("classify_top_divisor: d <= n required");
  const i64 c = m / d;
  // c >= r because d <= n <= m/r.
  if (c == r) return TopDivisorClass::EqualsDegree;
  if (c == r + 1) return TopDivisorClass::QuotientRPlus1;
  return TopDivisorClass::QuotientAtLeastRPlus2;
}

std::vector<BoundaryPair> boundary_pairs(i64 m, i64 n, i64 r) {
  require_regime(m, n, r, "boundary_pairs");
  const auto divs = divisors_of(m);
  std::vector<BoundaryPair> out;
  for (std::size_t i = 0; i < divs.size(); ++i) {
    const i64 d1 = divs[i];
    if (d1 * (r + 1) > m) break;
    for (std::size_t j = i; j < divs.size(); ++j) {
      const i64 d2 = divs[j];
      if (d2 * (r + 1) > m) break;
      const i64 sum = d1 + d2;
      if (sum > n) continue;
      // sum > m(2r+3) / (2(r+1)(r+2)), cross-multiplied
      using wide = __int128;
      if (static_cast<wide>(sum) * 2 * (r + 1) * (r + 2) <= static_cast<wide>(m) * (2 * r + 3)) {
        continue;
      }
      BoundaryPair pair{d1, d2, m / d1, m / d2};
      const bool pattern =
          pair.c2 <= 2 * r + 3 &&
          ((r + 2 <= pair.c2 && pair.c2 <= pair.c1 && pair.c1 < 2 * (r + 1) * (r + 2)) ||
           (pair.c2 == r + 1 && pair.c1 >= r * (r + 1)));
      if (!pattern) {
        throw std::logic_error("boundary_pairs: cofactor pattern violated for m=" +
                               std::to_string(m) + " d1=" + std::to_string(d1) +
                               " d2=" + std::to_string(d2));
      }
      out.push_back(pair);
    }
  }
  return out;
}

}  // namespace permorder
