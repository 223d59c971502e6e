#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace permorder {

using i64 = std::int64_t;
using u64 = std::uint64_t;

/// Arbitrary-precision integer and rational. Rat is kept canonical
/// (lowest terms, positive denominator): GMP arithmetic preserves the
/// canonical form, and make_rat() is the only construction path from a
/// raw numerator/denominator pair.
using Int = mpz_class;
using Rat = mpq_class;

/// Reduced fraction num/den. Throws std::invalid_argument if den == 0.
Rat make_rat(Int num, Int den);
Rat rat_of(i64 num, i64 den = 1);

/// k!, cached per thread. The reference stays valid until a larger k is
/// requested from the same thread; copy if you need to hold it across calls.
const Int& factorial(i64 k);

/// Smallest y >= 0 with y^q >= x. Requires x >= 0, q >= 1.
Int root_ceil(const Int& x, unsigned long q);

/// ceil(m^(num/den)) for m >= 1, num >= 0, den >= 1.
Int pow_ceil(i64 m, i64 num, i64 den);

/// q^exp for exp >= 0.
Rat rat_pow(const Rat& q, unsigned exp);

/// Sign of a*na^(p/q) - b*nb^(p/q), evaluated exactly (na, nb >= 1, q >= 1).
/// Used for scaled-residual trend comparisons where the exponent is a
/// non-integer rational like 12/5 or 3/2.
int compare_scaled(const Rat& a, i64 na, const Rat& b, i64 nb, i64 p, i64 q);

/// "0" for zero; otherwise normalized scientific notation with `digits`
/// significant digits, correctly rounded (round half to even):
/// 2/3 -> "6.66666666667e-01".
std::string decimal_string(const Rat& value, int digits = 12);

double to_double(const Rat& value);

}  // namespace permorder
