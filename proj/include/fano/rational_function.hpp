#pragma once

#include "fano/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace fano {

// Dense univariate polynomial in t with rational coefficients; no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly monomial(const Rational& c, std::size_t degree);
  // 1 - t^d
  static UPoly one_minus_t_pow(std::size_t d);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational evaluate(const Rational& t) const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const Rational& k) const;
  friend bool operator==(const UPoly&, const UPoly&) = default;

  // Exact division; returns false (and leaves out untouched) if o does not divide.
  bool divides_into(const UPoly& o, UPoly& quotient) const;  // this / o

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// numerator / prod (1 - t^d)^e. Exact equality is by cross-multiplication.
class RationalFunction1 {
 public:
  using Denominator = std::map<std::size_t, int>;  // d -> e, d >= 1, e >= 1

  RationalFunction1() = default;
  RationalFunction1(UPoly numerator, Denominator denominator);

  const UPoly& numerator() const { return num_; }
  const Denominator& denominator() const { return den_; }
  UPoly expanded_denominator() const;
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction1 operator+(const RationalFunction1& o) const;
  RationalFunction1 operator-(const RationalFunction1& o) const;
  bool equals(const RationalFunction1& o) const;

  // Power series coefficients of t^0..t^order.
  std::vector<Rational> series(std::size_t order) const;

  // Replace a factor (1 - t^d), d > 1, by (1 - t^d') for the smallest proper
  // divisor d' whose quotient divides the numerator; repeat to a fixpoint.
  // (1 - t) factors are kept. Zero becomes 0 / 1.
  RationalFunction1 normalized() const;

  std::string str() const;

 private:
  UPoly num_;
  Denominator den_;
};

}  // namespace fano
