#ifndef RIORDAN_RATIONAL_HPP
#define RIORDAN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace riordan {

// Exact arbitrary-precision rational, the coefficient field of every
// series in this library. cpp_rational keeps the canonical form
// (positive denominator, reduced fraction) for us.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Renders "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "p" or "p/q" with optional surrounding whitespace.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

}  // namespace riordan

#endif
