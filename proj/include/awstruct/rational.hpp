#pragma once

/// \file
/// Exact rational scalars. Every coefficient, parameter and residual in the
/// exact engine is a GMP rational kept in canonical (lowest-terms, positive
/// denominator) form, so structural equality is value equality.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace awstruct {

using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(long numerator, long denominator = 1);

/// Parses "p" or "p/q" (optionally signed). Throws std::invalid_argument on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" text; integers are written with "/1".
std::string to_fraction_string(const Rational& value);

/// Integer power; negative exponents require a nonzero base.
Rational pow(const Rational& base, long exponent);

long double to_long_double(const Rational& value);

/// True and sets *root when value is the square of a nonnegative rational.
bool rational_sqrt(const Rational& value, Rational* root);

}  // namespace awstruct
