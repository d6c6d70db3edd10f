#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bibdopt {

using Integer = mpz_class;
using Rational = mpq_class;  // always kept in canonical (reduced) form

/// C(n, k), zero outside 0 <= k <= n.
Integer binomial(long n, long k);

Integer ipow(const Integer& base, unsigned long exponent);

std::string to_string(const Integer& value);

/// "p/q", or just "p" when the denominator is one.
std::string to_string(const Rational& value);

Integer parse_integer(std::string_view text);

/// Smallest integer >= value.
Integer ceil(const Rational& value);

/// Smallest integer r with r^n >= value (value >= 0, n >= 1).
Integer ceil_root(const Integer& value, unsigned long n);

}  // namespace bibdopt
