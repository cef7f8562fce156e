#include "fano/singularity.hpp"

#include "fano/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace fano {

QuotientSingularity::QuotientSingularity(Integer R, Integer a) : R_(std::move(R)), a_(std::move(a)) {
  if (R_ < 1) throw Error(ErrorKind::OutOfRange, "singularity order must be positive");
  if (R_ == 1) {
    a_ = 0;
    return;
  }
  a_ = mod_floor(a_, R_);
  if (gcd(a_, R_) != 1) throw Error(ErrorKind::NotCoprime, "1/" + R_.str() + "(1," + a_.str() + ") is not cyclic");
  Integer inv = mod_inverse(a_, R_);
  if (inv < a_) a_ = inv;
}

Integer QuotientSingularity::k() const { return is_smooth() ? Integer(1) : gcd(a_ + 1, R_); }
Integer QuotientSingularity::r() const { return R_ / k(); }
Integer QuotientSingularity::c() const { return is_smooth() ? Integer(1) : Integer((a_ + 1) / k()); }

std::string QuotientSingularity::str() const { return "1/" + R_.str() + "(1," + a_.str() + ")"; }

bool is_T_singularity(const QuotientSingularity& s) { return s.k() % s.r() == 0; }
bool is_R_singularity(const QuotientSingularity& s) { return s.k() < s.r(); }

QuotientSingularity cone_singularity(const LatticePoint& p0, const LatticePoint& p1) {
  LatticePoint u = p0, w = p1;
  {
    Integer g0 = gcd(u.x, u.y), g1 = gcd(w.x, w.y);
    if (g0 == 0 || g1 == 0) throw Error(ErrorKind::NotFullDimensional, "cone generator is zero");
    u = {u.x / g0, u.y / g0};
    w = {w.x / g1, w.y / g1};
  }
  Integer R = abs(cross(u, w));
  if (R == 0) throw Error(ErrorKind::NotFullDimensional, "cone is not two-dimensional");
  // Send u to (0,1) by the rows (u.y, -u.x) and (s, t) with s*u.x + t*u.y = 1.
  auto eg = extended_gcd(u.x, u.y);
  Integer X = u.y * w.x - u.x * w.y;
  Integer Y = eg.s * w.x + eg.t * w.y;
  (void)X;  // |X| == R; a reflection in x fixes its sign without touching Y.
  return QuotientSingularity(R, -Y);
}

QuotientSingularity cone_singularity(const EdgeData& e) { return cone_singularity(e.from, e.to); }

Rational HJFraction::evaluate() const {
  if (entries.empty()) throw Error(ErrorKind::OutOfRange, "empty continued fraction");
  Rational v = entries.back();
  for (auto it = entries.rbegin() + 1; it != entries.rend(); ++it) v = Rational(*it) - 1 / v;
  return v;
}

HJFraction hj_fraction(const Integer& p, const Integer& q) {
  if (!(q > 0 && q < p)) throw Error(ErrorKind::OutOfRange, "need 0 < q < p");
  if (gcd(p, q) != 1) throw Error(ErrorKind::NotCoprime, "p and q must be coprime");
  HJFraction hj;
  Integer num = p, den = q;
  while (den != 0) {
    Integer a = ceil_div(num, den);
    hj.entries.push_back(a);
    Integer rem = a * den - num;  // num/den = a - rem/den
    num = den;
    den = rem;
  }
  return hj;
}

EdgeContent edge_singularity_content(const EdgeData& e) {
  EdgeContent out;
  out.n = e.length / e.height;
  Integer k0 = e.length % e.height;
  if (k0 == 0) return out;
  // Residue 1/(k0 r)(1, k0 c - 1) with c read off the full cone 1/(kr)(1, kc-1).
  QuotientSingularity full = cone_singularity(e);
  Integer r = e.height;
  Integer c = full.c();
  out.residue = QuotientSingularity(k0 * r, k0 * c - 1);
  return out;
}

bool SingularityContent::same_as(const SingularityContent& o) const {
  return n == o.n && sorted_basket() == o.sorted_basket();
}

std::vector<QuotientSingularity> SingularityContent::sorted_basket() const {
  auto b = basket;
  std::sort(b.begin(), b.end());
  return b;
}

SingularityContent singularity_content(const Polygon& p) {
  SingularityContent sc{0, {}};
  for (const auto& e : edges(p)) {
    auto ec = edge_singularity_content(e);
    sc.n += ec.n;
    if (ec.residue) sc.basket.push_back(*ec.residue);
  }
  return sc;
}

Integer max_local_index(const Polygon& p) {
  Integer m = 0;
  for (const auto& e : edges(p)) m = std::max(m, e.height);
  return m;
}

Integer basket_max_index(const std::vector<QuotientSingularity>& basket) {
  Integer m = 1;
  for (const auto& s : basket) m = std::max(m, s.r());
  return m;
}

namespace {

class BasketParser {
 public:
  explicit BasketParser(const std::string& text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
  }

  std::vector<QuotientSingularity> parse() {
    std::vector<QuotientSingularity> out;
    if (s_.empty()) return out;
    while (true) {
      Integer mult = 1;
      // Optional "<m>x" prefix: digits followed by 'x'/'X'/'*'.
      std::size_t save = pos_;
      if (peek_digit()) {
        Integer m = number();
        if (pos_ < s_.size() && (s_[pos_] == 'x' || s_[pos_] == 'X' || s_[pos_] == '*')) {
          ++pos_;
          mult = m;
        } else {
          pos_ = save;
        }
      }
      expect('1');
      expect('/');
      Integer R = number();
      Integer a = 1;
      if (pos_ < s_.size() && s_[pos_] == '(') {
        ++pos_;
        expect('1');
        expect(',');
        a = number();
        expect(')');
      }
      if (mult < 0) fail();
      QuotientSingularity q(R, a);
      if (!is_R_singularity(q))
        throw Error(ErrorKind::BasketNotResidual, q.str() + " is not an R-singularity");
      for (Integer i = 0; i < mult; ++i) out.push_back(q);
      if (pos_ == s_.size()) break;
      expect('+');
    }
    return out;
  }

 private:
  bool peek_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }
  Integer number() {
    if (!peek_digit()) fail();
    std::size_t start = pos_;
    while (peek_digit()) ++pos_;
    return Integer(s_.substr(start, pos_ - start));
  }
  void expect(char ch) {
    if (pos_ >= s_.size() || s_[pos_] != ch) fail();
    ++pos_;
  }
  [[noreturn]] void fail() const {
    throw Error(ErrorKind::ParseError, "cannot parse basket '" + s_ + "' at offset " + std::to_string(pos_));
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<QuotientSingularity> parse_basket(const std::string& text) {
  auto b = BasketParser(text).parse();
  std::sort(b.begin(), b.end());
  return b;
}

std::string basket_to_string(const std::vector<QuotientSingularity>& basket) {
  std::map<QuotientSingularity, int> counts;
  for (const auto& s : basket) ++counts[s];
  std::string out;
  for (const auto& [s, m] : counts) {
    if (!out.empty()) out += " + ";
    out += std::to_string(m) + "x" + s.str();
  }
  return out;
}

}  // namespace fano
