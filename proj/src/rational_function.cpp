#include "fano/rational_function.hpp"

#include <algorithm>

namespace fano {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::one_minus_t_pow(std::size_t d) {
  std::vector<Rational> v(d + 1, Rational(0));
  v[0] = 1;
  v[d] -= 1;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::evaluate(const Rational& t) const {
  Rational v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
  return v;
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return UPoly(std::move(v));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + o * Rational(-1); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return UPoly(std::move(v));
}

UPoly UPoly::operator*(const Rational& k) const {
  std::vector<Rational> v = c_;
  for (auto& x : v) x *= k;
  return UPoly(std::move(v));
}

bool UPoly::divides_into(const UPoly& o, UPoly& quotient) const {
  if (o.is_zero()) return false;
  if (is_zero()) {
    quotient = {};
    return true;
  }
  if (degree() < o.degree()) return false;
  std::vector<Rational> rem = c_;
  std::vector<Rational> q(c_.size() - o.c_.size() + 1, Rational(0));
  const Rational& lead = o.c_.back();
  for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
    Rational f = rem[i + o.degree()] / lead;
    q[i] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) rem[i + j] -= f * o.c_[j];
  }
  for (const auto& r : rem)
    if (r != 0) return false;
  quotient = UPoly(std::move(q));
  return true;
}

std::string UPoly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational c = c_[i];
    bool neg = c < 0;
    if (neg) c = -c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    bool unit = c == 1;
    if (!unit || i == 0) s += to_string(c);
    if (i > 0) {
      if (!unit) s += "*";
      s += "t";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

RationalFunction1::RationalFunction1(UPoly numerator, Denominator denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  for (auto it = den_.begin(); it != den_.end();) it = it->second == 0 ? den_.erase(it) : std::next(it);
}

UPoly RationalFunction1::expanded_denominator() const {
  UPoly d(std::vector<Rational>{1});
  for (const auto& [deg, e] : den_)
    for (int i = 0; i < e; ++i) d = d * UPoly::one_minus_t_pow(deg);
  return d;
}

RationalFunction1 RationalFunction1::operator+(const RationalFunction1& o) const {
  Denominator common = den_;
  for (const auto& [d, e] : o.den_) common[d] = std::max(common[d], e);
  auto lift = [&](const RationalFunction1& f) {
    UPoly n = f.num_;
    for (const auto& [d, e] : common) {
      auto it = f.den_.find(d);
      int have = it == f.den_.end() ? 0 : it->second;
      for (int i = have; i < e; ++i) n = n * UPoly::one_minus_t_pow(d);
    }
    return n;
  };
  return {lift(*this) + lift(o), common};
}

RationalFunction1 RationalFunction1::operator-(const RationalFunction1& o) const {
  return *this + RationalFunction1(o.num_ * Rational(-1), o.den_);
}

bool RationalFunction1::equals(const RationalFunction1& o) const {
  return num_ * o.expanded_denominator() == o.num_ * expanded_denominator();
}

std::vector<Rational> RationalFunction1::series(std::size_t order) const {
  std::vector<Rational> s(order + 1, Rational(0));
  for (std::size_t i = 0; i <= order; ++i) s[i] = num_.coeff(i);
  // Multiply by 1/(1 - t^d) e times: running prefix sums with stride d.
  for (const auto& [d, e] : den_)
    for (int rep = 0; rep < e; ++rep)
      for (std::size_t i = d; i <= order; ++i) s[i] += s[i - d];
  return s;
}

RationalFunction1 RationalFunction1::normalized() const {
  if (num_.is_zero()) return {};
  UPoly num = num_;
  Denominator den = den_;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [d, e] : den) {
      if (d == 1 || e == 0) continue;
      for (std::size_t dp = 1; dp < d && !changed; ++dp) {
        if (d % dp) continue;
        // (1 - t^d) / (1 - t^dp) = 1 + t^dp + ... + t^(d-dp)
        std::vector<Rational> q(d - dp + 1, Rational(0));
        for (std::size_t i = 0; i <= d - dp; i += dp) q[i] = 1;
        UPoly quotient;
        if (num.divides_into(UPoly(std::move(q)), quotient)) {
          num = quotient;
          std::size_t from = d;
          --den[from];
          ++den[dp];
          changed = true;
        }
      }
      if (changed) break;
    }
    for (auto it = den.begin(); it != den.end();) it = it->second == 0 ? den.erase(it) : std::next(it);
  }
  return {num, den};
}

std::string RationalFunction1::str() const {
  std::string s = "(" + num_.str() + ")";
  if (den_.empty()) return s;
  s += " / (";
  bool first = true;
  for (const auto& [d, e] : den_) {
    if (!first) s += "*";
    first = false;
    s += "(1-t";
    if (d > 1) s += "^" + std::to_string(d);
    s += ")";
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s + ")";
}

}  // namespace fano
