#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fgdef {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Accepts "p/q", "p" or "-p/q".
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

Rational pow(const Rational& base, unsigned exponent);
BigInt pow(const BigInt& base, unsigned exponent);

/// Smallest integer >= r.
BigInt ceil(const Rational& r);

/// Rounds to 12 significant digits.
std::string to_decimal(const Rational& r, int significant_digits = 12);
std::string to_decimal(double value, int significant_digits = 12);

}  // namespace fgdef
