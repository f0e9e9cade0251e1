#ifndef HEISYM_RATIONAL_HPP
#define HEISYM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace heisym {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar: arbitrary-precision numerator and positive
/// denominator, always in lowest terms. No rounding anywhere.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

/// Canonical text form: "n/d", or just "n" when the denominator is 1.
std::string rational_to_string(const Rational& r);

/// Parses "n" or "n/d" with optional leading '-'. Rejects everything else
/// (whitespace, hex, floats), so wire data stays canonical.
std::optional<Rational> parse_rational(const std::string& text);

bool is_integer_square(const Integer& n);

/// Exact square root when r is the square of a rational, empty otherwise.
std::optional<Rational> rational_sqrt(const Rational& r);

}  // namespace heisym

#endif
