#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>

namespace fano {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer abs(const Integer& v);
Integer gcd(const Integer& a, const Integer& b);

// Floor/ceil division for any signs; divisor must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
// Result in [0, |m|).
Integer mod_floor(const Integer& a, const Integer& m);

struct ExtendedGcd {
  Integer g, s, t;  // s*a + t*b = g >= 0
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

// Inverse of a modulo m; requires gcd(a, m) == 1 and m >= 1.
Integer mod_inverse(const Integer& a, const Integer& m);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

// "p" or "p/q".
std::string to_string(const Integer& v);
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

// Checked narrowing; throws Error(OutOfRange) when the value does not fit.
std::int64_t to_int64(const Integer& v);

}  // namespace fano
