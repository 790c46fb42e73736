#pragma once

// Exact scalar types. Every weight, threshold and series exponent in the
// library is a Rational; every Euler characteristic and binomial value is a
// BigInt. No binary floating point appears on any value path.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace wbary {

using BigInt = boost::multiprecision::cpp_int;

/// Always held in lowest terms with a positive denominator, so == and < are
/// value comparisons and the type can key ordered maps directly.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", "p", or a finite decimal such as "-0.35" into an exact
/// value. Exponent notation is rejected. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// Parses an optionally signed decimal integer. Throws Error(ParseError).
BigInt parse_integer(std::string_view text);

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& n);

/// Greatest integer <= q.
BigInt floor_rational(const Rational& q);

/// Narrows a count-like BigInt (a floor, a subset size) to a machine integer.
/// Throws Error(OutOfScope) if it does not fit.
std::int64_t to_int64(const BigInt& n);

}  // namespace wbary
