#include "permorder/rational.hpp"

#include <stdexcept>
#include <vector>

namespace permorder {

Rat make_rat(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

Rat rat_of(i64 num, i64 den) { return make_rat(Int(num), Int(den)); }

const Int& factorial(i64 k) {
  if (k < 0) throw std::invalid_argument("factorial: negative argument");
  thread_local std::vector<Int> table{Int(1)};
  while (static_cast<i64>(table.size()) <= k) {
    table.push_back(table.back() * static_cast<unsigned long>(table.size()));
  }
  return table[static_cast<std::size_t>(k)];
}

Int root_ceil(const Int& x, unsigned long q) {
  if (x < 0) throw std::invalid_argument("root_ceil: negative radicand");
  if (q == 0) throw std::invalid_argument("root_ceil: zero index");
  Int r;
  int exact = mpz_root(r.get_mpz_t(), x.get_mpz_t(), q);
  if (!exact) r += 1;
  return r;
}

Int pow_ceil(i64 m, i64 num, i64 den) {
  if (m < 1 || num < 0 || den < 1) throw std::invalid_argument("pow_ceil: bad arguments");
  Int base(m), p;
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(num));
  return root_ceil(p, static_cast<unsigned long>(den));
}

Rat rat_pow(const Rat& q, unsigned exp) {
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), exp);
  return make_rat(num, den);
}

int compare_scaled(const Rat& a, i64 na, const Rat& b, i64 nb, i64 p, i64 q) {
  if (na < 1 || nb < 1 || q < 1 || p < 0) throw std::invalid_argument("compare_scaled: bad arguments");
  const int sa = sgn(a), sb = sgn(b);
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  // Same nonzero sign: raise both magnitudes to the q-th power, which is
  // monotone on positives, so the exponent n^(p/q) becomes the integer n^p.
  Int npa, npb;
  mpz_ui_pow_ui(npa.get_mpz_t(), static_cast<unsigned long>(na), static_cast<unsigned long>(p));
  mpz_ui_pow_ui(npb.get_mpz_t(), static_cast<unsigned long>(nb), static_cast<unsigned long>(p));
  const Rat lhs = rat_pow(abs(a), static_cast<unsigned>(q)) * Rat(npa);
  const Rat rhs = rat_pow(abs(b), static_cast<unsigned>(q)) * Rat(npb);
  const int c = cmp(lhs, rhs);
  return sa > 0 ? c : -c;
}

namespace {

Int pow10(i64 e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

// floor(log10(N/D)) for N, D > 0
i64 decimal_exponent(const Int& num, const Int& den) {
  i64 e = static_cast<i64>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
          static_cast<i64>(mpz_sizeinbase(den.get_mpz_t(), 10));
  auto at_least = [&](i64 k) {  // N/D >= 10^k ?
    return k >= 0 ? num >= den * pow10(k) : num * pow10(-k) >= den;
  };
  while (!at_least(e)) --e;
  while (at_least(e + 1)) ++e;
  return e;
}

}  // namespace

std::string decimal_string(const Rat& value, int digits) {
  if (digits < 1) throw std::invalid_argument("decimal_string: digits < 1");
  if (value == 0) return "0";
  const bool neg = sgn(value) < 0;
  const Int num = abs(value.get_num());
  const Int& den = value.get_den();

  i64 e = decimal_exponent(num, den);
  const i64 shift = digits - 1 - e;
  Int n2 = num, d2 = den;
  if (shift >= 0) {
    n2 *= pow10(shift);
  } else {
    d2 *= pow10(-shift);
  }
  Int m, rem;
  mpz_fdiv_qr(m.get_mpz_t(), rem.get_mpz_t(), n2.get_mpz_t(), d2.get_mpz_t());
  const Int twice = rem * 2;
  if (twice > d2 || (twice == d2 && mpz_odd_p(m.get_mpz_t()))) m += 1;
  if (m == pow10(digits)) {  // rounding carried into a new leading digit
    m = pow10(digits - 1);
    ++e;
  }

  std::string s = m.get_str();
  std::string out;
  if (neg) out += '-';
  out += s[0];
  if (s.size() > 1) {
    out += '.';
    out += s.substr(1);
  }
  out += 'e';
  out += (e < 0 ? '-' : '+');
  std::string es = std::to_string(e < 0 ? -e : e);
  if (es.size() < 2) es.insert(es.begin(), '0');
  out += es;
  return out;
}

double to_double(const Rat& value) { return value.get_d(); }

}  // namespace permorder
