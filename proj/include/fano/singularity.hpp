#pragma once

#include "fano/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fano {

// Cyclic quotient singularity 1/R(1,a), the cone <(0,1),(R,-a)>. Stored with
// a = min(a, a^-1 mod R) so transposed cones compare equal. R = 1 is the
// smooth cone (a = 0).
class QuotientSingularity {
 public:
  QuotientSingularity(Integer R, Integer a);
  static QuotientSingularity smooth() { return {1, 0}; }

  const Integer& order() const { return R_; }
  const Integer& weight() const { return a_; }
  bool is_smooth() const { return R_ == 1; }

  // 1/(kr)(1, kc-1) data; k = gcd(a+1, R).
  Integer k() const;
  Integer r() const;
  Integer c() const;

  std::string str() const;  // "1/R(1,a)"

  friend bool operator==(const QuotientSingularity&, const QuotientSingularity&) = default;
  friend bool operator<(const QuotientSingularity& s, const QuotientSingularity& t) {
    return s.R_ < t.R_ || (s.R_ == t.R_ && s.a_ < t.a_);
  }

 private:
  Integer R_, a_;
};

bool is_T_singularity(const QuotientSingularity& s);
bool is_R_singularity(const QuotientSingularity& s);

// Type of the cone over an edge, from the primitive endpoints.
QuotientSingularity cone_singularity(const EdgeData& e);
QuotientSingularity cone_singularity(const LatticePoint& p0, const LatticePoint& p1);

struct HJFraction {
  std::vector<Integer> entries;
  Rational evaluate() const;
};

HJFraction hj_fraction(const Integer& p, const Integer& q);

struct EdgeContent {
  Integer n;
  std::optional<QuotientSingularity> residue;
};

EdgeContent edge_singularity_content(const EdgeData& e);

struct SingularityContent {
  Integer n;
  std::vector<QuotientSingularity> basket;  // cyclic (clockwise edge) order

  // Multiset comparison, ignoring cyclic order.
  bool same_as(const SingularityContent& o) const;
  std::vector<QuotientSingularity> sorted_basket() const;
};

SingularityContent singularity_content(const Polygon& p);

Integer max_local_index(const Polygon& p);
Integer basket_max_index(const std::vector<QuotientSingularity>& basket);

// "<m> x 1/<R>(1,<a>)" terms joined by '+'; whitespace-insensitive. The
// multiplicity prefix and the "(1,a)" suffix (a = 1) are optional.
std::vector<QuotientSingularity> parse_basket(const std::string& text);
std::string basket_to_string(const std::vector<QuotientSingularity>& basket);

}  // namespace fano
