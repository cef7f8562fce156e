#include "fano/numeric.hpp"

#include "fano/error.hpp"

#include <limits>

namespace fano {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::OriginNotInterior: return "OriginNotInterior";
    case ErrorKind::NonPrimitiveVertex: return "NonPrimitiveVertex";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::NotHyperplaneSummable: return "NotHyperplaneSummable";
    case ErrorKind::BasketNotResidual: return "BasketNotResidual";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BoundsExceeded: return "BoundsExceeded";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

Integer abs(const Integer& v) { return v < 0 ? Integer(-v) : v; }

Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a), y = abs(b);
  while (y != 0) {
    Integer r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer mm = abs(m);
  Integer r = a % mm;
  if (r < 0) r += mm;
  return r;
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  if (m == 1) return 0;
  auto eg = extended_gcd(mod_floor(a, m), m);
  if (eg.g != 1) throw Error(ErrorKind::NotCoprime, "no inverse of " + a.str() + " mod " + m.str());
  return mod_floor(eg.s, m);
}

Integer floor(const Rational& q) { return floor_div(numerator_of(q), denominator_of(q)); }
Integer ceil(const Rational& q) { return ceil_div(numerator_of(q), denominator_of(q)); }

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& q) {
  if (denominator_of(q) == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return Error(ErrorKind::ParseError, "bad rational '" + text + "'"); };
  auto parse_int = [&](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw bad();
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') throw bad();
    return Integer(s[0] == '+' ? s.substr(1) : s);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw bad();
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::int64_t to_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorKind::OutOfRange, "integer " + v.str() + " exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace fano
