#pragma once

#include <gmpxx.h>

#include <string>

namespace wreath {

// Arbitrary-precision rational scalar. GMP keeps values in lowest terms with
// a positive denominator through all arithmetic; the helpers below
// canonicalize on construction and handle the "p/q" text form used by the
// file formats.
using Rational = mpq_class;

// num/den as an exact rational. Throws std::invalid_argument if den == 0.
Rational make_rational(long num, long den = 1);

// Parses "p" or "p/q" (base 10, optional leading '-' on p). Throws
// std::invalid_argument on anything else, including a zero denominator.
Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& value);

// True iff value is an integer >= 0.
bool is_nonnegative_integer(const Rational& value);

}  // namespace wreath
