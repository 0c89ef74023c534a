#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mono {

/// Exact rational used by every threshold predicate. Never converted to
/// floating point inside a decision.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational ratio(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

/// "p" for integers, "p/q" otherwise (lowest terms, sign on the numerator).
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws mono::Error (Parse) on malformed input or q == 0.
Rational parse_rational(std::string_view text);

BigInt ceil(const Rational& q);
BigInt floor(const Rational& q);

// Irrational thresholds of the form a^{1/3} * scale, compared by cubing.
// Both a and scale must be non-negative.

/// lhs >= a^{1/3} * scale
bool at_least_cbrt(const Rational& lhs, const Rational& a, const Rational& scale);
/// lhs <= a^{1/3} * scale
bool at_most_cbrt(const Rational& lhs, const Rational& a, const Rational& scale);

}  // namespace mono
