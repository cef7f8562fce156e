#pragma once

#include "fano/lattice.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace fano {

// Parameter exponents, e.g. {a:2, c:1} for a^2 c.
using Monomial = std::map<std::string, unsigned>;

// Polynomial in named parameters with rational coefficients; zero terms are never stored.
class CoeffPoly {
 public:
  CoeffPoly() = default;
  CoeffPoly(const Rational& c);  // NOLINT(implicit)
  static CoeffPoly variable(const std::string& name);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<Rational> as_constant() const;
  std::set<std::string> parameters() const;

  CoeffPoly operator+(const CoeffPoly& o) const;
  CoeffPoly operator-(const CoeffPoly& o) const;
  CoeffPoly operator*(const CoeffPoly& o) const;
  CoeffPoly& operator+=(const CoeffPoly& o);
  friend bool operator==(const CoeffPoly&, const CoeffPoly&) = default;

  // Renaming must be injective on parameters(); unnamed parameters are kept.
  CoeffPoly rename(const std::map<std::string, std::string>& names) const;
  CoeffPoly specialize(const std::map<std::string, Rational>& values) const;

  // Highest total degree first, e.g. "6*a^2 + 24*a + 4*c + 186".
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

CoeffPoly parse_coeff_poly(const std::string& text);

using Exponent = std::pair<std::int64_t, std::int64_t>;

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::map<Exponent, CoeffPoly> terms);

  const std::map<Exponent, CoeffPoly>& terms() const { return terms_; }
  std::vector<LatticePoint> support() const;
  CoeffPoly constant_term() const;
  std::set<std::string> parameters() const;

  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly rename(const std::map<std::string, std::string>& names) const;
  LaurentPoly specialize(const std::map<std::string, Rational>& values) const;

  std::string str() const;

 private:
  std::map<Exponent, CoeffPoly> terms_;
};

// Sum of terms "coef*x^i*y^j"; coef is an integer, a rational p/q, a parameter
// name or a product of those. Exponents may be negative ("x^-1" or "x^(-1)").
LaurentPoly parse_laurent(const std::string& text);

Polygon newton_polygon(const LaurentPoly& f);

struct PeriodPrefix {
  std::vector<CoeffPoly> values;  // π_0 .. π_N

  PeriodPrefix rename(const std::map<std::string, std::string>& names) const;
  std::set<std::string> parameters() const;
};

// π_n = constant term of f^n. Terms of f^k that cannot return to the origin in
// the remaining n_max - k factors are dropped.
PeriodPrefix period_prefix(const LaurentPoly& f, std::size_t n_max);
// Reference: full expansion, no pruning.
PeriodPrefix period_prefix_dense(const LaurentPoly& f, std::size_t n_max);

enum class PeriodVerdict { Distinct, Inconclusive };

struct PeriodComparison {
  PeriodVerdict verdict = PeriodVerdict::Inconclusive;
  // For Distinct: smallest N such that the prefixes through π_N already differ
  // under every admissible renaming.
  std::size_t witness = 0;
  // For Inconclusive: a renaming of the second prefix's parameters matching the first.
  std::map<std::string, std::string> matching;
};

// Distinct iff no injective renaming of g's parameters (into f's parameters or
// fresh names) makes π_0..π_N agree, N the shorter prefix length.
PeriodComparison periods_distinct(const PeriodPrefix& f, const PeriodPrefix& g);
PeriodComparison periods_distinct(const LaurentPoly& f, const LaurentPoly& g, std::size_t n_max);

std::string to_string(PeriodVerdict v);

// Shipped fixtures for table polygons 1.7, 1.8, 2.6 and 2.7.
struct PeriodFixture {
  std::string id;                            // "1.7"
  std::vector<LatticePoint> vertices;
  std::optional<std::string> laurent;        // absent when only the period prefix is known
  std::map<std::string, std::string> renaming;  // polynomial parameter -> period parameter
  std::vector<std::string> printed;          // π_0 .. π_5 in period parameter names
  std::string partner;                       // fixture it is compared against

  PeriodPrefix printed_prefix() const;
  // Computed from the polynomial and renamed, or the printed prefix when fixture-only.
  PeriodPrefix prefix(std::size_t n_max = 5) const;
  bool fixture_only() const { return !laurent.has_value(); }
};

const std::vector<PeriodFixture>& period_fixtures();
const PeriodFixture* find_period_fixture(const Polygon& normal_form_polygon);

}  // namespace fano
