#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace zfort {

/// Arbitrary-precision exact rational; always kept in canonical form.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
/// Accepts "p", "-p", "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);

/// Dyadic rationals with `bits` fractional bits bracketing the natural log of
/// d >= 1: log_lower_bound(d) <= ln d <= log_upper_bound(d). Both are exact
/// (zero) at d = 1.
Rational log_lower_bound(const Integer& d, unsigned bits = 64);
Rational log_upper_bound(const Integer& d, unsigned bits = 64);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace zfort
