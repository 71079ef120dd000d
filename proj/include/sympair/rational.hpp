#pragma once

// Exact scalar types used throughout the library. There is no floating point
// anywhere in sympair: every quantity is an arbitrary-precision integer or
// rational backed by GMP.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sympair {

// Expression templates off: values behave like plain value types in generic code.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using RatVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" (whitespace around the slash is not allowed).
Rational parse_rational(std::string_view text);

/// Canonical textual form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);
std::string to_string(const RatVector& v);

int sign(const Rational& value);
Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);
bool is_integral(const Rational& value);

Rational dot(const RatVector& a, const RatVector& b);
RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector scale(const Rational& s, const RatVector& v);
bool is_zero(const RatVector& v);
RatVector zero_vector(std::size_t n);

/// Returns r with b == r * a if such a rational exists (a must be nonzero).
bool proportional(const RatVector& a, const RatVector& b, Rational* factor);

/// Lexicographic comparison, handy for deterministic ordering of points.
bool lex_less(const RatVector& a, const RatVector& b);

}  // namespace sympair
