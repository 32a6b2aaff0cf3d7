#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gmanvol {

/// Exact rational with arbitrary-precision numerator and denominator.
/// Always reduced, denominator positive.
using Rational = boost::multiprecision::cpp_rational;

Rational make_rational(std::int64_t numerator, std::int64_t denominator = 1);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Inverse of to_string. Throws Error(ParseError) on malformed text.
Rational parse_rational(std::string_view text);

/// Decimal rendering with `digits` significant digits, display only.
std::string to_decimal(const Rational& value, int digits = 12);

Rational abs(const Rational& value);

/// Floor and ceiling of num/den for den > 0.
std::int64_t floor_div(std::int64_t num, std::int64_t den);
std::int64_t ceil_div(std::int64_t num, std::int64_t den);

}  // namespace gmanvol
