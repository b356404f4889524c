#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ksplit {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "3/4", "-2", "0.75" or ".5" into an exact rational. Decimals are
/// converted digit by digit, so "0.1" is exactly 1/10.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Rounds half away from zero to `digits` fractional digits and strips
/// trailing zeros ("0.250000" -> "0.25", "1.000000" -> "1").
std::string to_decimal(const Rational& value, int digits);

}  // namespace ksplit
