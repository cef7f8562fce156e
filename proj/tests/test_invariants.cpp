#include "corpus.hpp"
#include "fano/invariants.hpp"
#include "fano/mutation.hpp"
#include "fano/oracles.hpp"

#include "doctest.h"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <complex>

using namespace fano;
using namespace fano::test;

namespace {

RationalFunction1 rf(std::vector<Rational> num, RationalFunction1::Denominator den) {
  return RationalFunction1(UPoly(std::move(num)), std::move(den));
}

using Float = boost::multiprecision::cpp_bin_float_50;

// Direct sum over the nontrivial R-th roots of unity.
Float delta_by_roots(int R, int a, int j) {
  using C = std::complex<Float>;
  const Float pi = boost::math::constants::pi<Float>();
  C sum(0, 0);
  for (int m = 1; m < R; ++m) {
    Float th = 2 * pi * m / R;
    C e(cos(th), sin(th));
    C ej(cos(th * j), sin(th * j));
    C ea(cos(th * a), sin(th * a));
    sum += ej / ((C(1, 0) - e) * (C(1, 0) - ea));
  }
  return sum.real() / R;
}

}  // namespace

TEST_SUITE("invariants") {
  TEST_CASE("discrepancies") {
    auto d5 = discrepancies(QuotientSingularity(5, 1));
    CHECK(d5.hj.entries == std::vector<Integer>{5});
    CHECK(d5.discrepancies == std::vector<Rational>{Rational(-3, 5)});
    CHECK(discrepancies(QuotientSingularity(3, 1)).discrepancies == std::vector<Rational>{Rational(-1, 3)});
    CHECK(discrepancies(QuotientSingularity(6, 1)).discrepancies == std::vector<Rational>{Rational(-2, 3)});
  }

  TEST_CASE("discrepancies lie in (-1, 0]") {
    for (int R = 2; R <= 30; ++R)
      for (int a = 1; a < R; ++a) {
        if (gcd(a, R) != 1) continue;
        for (const auto& d : discrepancies(QuotientSingularity(R, a)).discrepancies) {
          CHECK(d > -1);
          CHECK(d <= 0);
        }
      }
  }

  TEST_CASE("degree contributions") {
    CHECK(degree_contribution(QuotientSingularity(5, 1)) == Rational(1, 5));
    CHECK(degree_contribution(QuotientSingularity(3, 1)) == Rational(5, 3));
    CHECK(degree_contribution(QuotientSingularity(6, 1)) == Rational(-2, 3));
  }

  TEST_CASE("Riemann-Roch terms") {
    CHECK(riemann_roch_term(QuotientSingularity(5, 1))
              .equals(rf({0, Rational(1, 5), Rational(-2, 5), Rational(1, 5)}, {{5, 1}})));
    auto q6 = riemann_roch_term(QuotientSingularity(6, 1));
    CHECK(q6.equals(rf({0, Rational(1, 3)}, {{3, 1}})));
    CHECK(q6.denominator() == RationalFunction1::Denominator{{3, 1}});
    CHECK(riemann_roch_term(QuotientSingularity(3, 1)).equals(rf({0, Rational(-1, 3)}, {{3, 1}})));
  }

  TEST_CASE("Dedekind sums against the root-of-unity sum") {
    for (int R = 2; R <= 30; ++R)
      for (int a = 1; a < R; ++a) {
        if (gcd(a, R) != 1) continue;
        QuotientSingularity s(R, a);
        int aa = static_cast<int>(s.weight());
        for (int j = 0; j < R; ++j) {
          Rational exact = dedekind_delta(s, j);
          Float approx = delta_by_roots(R, aa, j);
          Float diff = abs(approx - Float(numerator_of(exact)) / Float(denominator_of(exact)));
          if (diff > Float("1e-30")) FAIL("delta R=" << R << " a=" << aa << " j=" << j);
        }
      }
  }

  TEST_CASE("Riemann-Roch numerators for R-singularities up to 30") {
    for (int R = 2; R <= 30; ++R)
      for (int a = 1; a < R; ++a) {
        if (gcd(a, R) != 1) continue;
        QuotientSingularity s(R, a);
        if (!is_R_singularity(s)) continue;
        auto q = riemann_roch_term(s);
        CHECK(q.numerator().coeff(0) == 0);
        for (const auto& c : q.numerator().coeffs()) CHECK(R % denominator_of(c) == 0);
      }
  }

  TEST_CASE("degrees") {
    CHECK(anticanonical_degree(p115()) == Rational(49, 5));
    CHECK(anticanonical_degree(p2()) == 9);
    CHECK(anticanonical_degree(poly({{-1, 3}, {1, 3}, {1, -1}, {-1, -2}})) == 2);
    for (const auto* row : table_rows()) CHECK_MESSAGE(anticanonical_degree(poly(row->vertices)) == row->degree, row->id);
  }

  TEST_CASE("Hilbert series of the weighted plane") {
    auto h = hilbert_series(p115(), 6);
    CHECK(h.function.equals(rf({1, 8, 0, 2, -2, 0, -8, -1}, {{1, 3}, {5, 1}})));
    CHECK(h.function.denominator() == RationalFunction1::Denominator{{1, 3}, {5, 1}});
  }

  TEST_CASE("Hilbert series of the plane") {
    auto h = hilbert_series(p2(), 3);
    CHECK(h.series == std::vector<Rational>{1, 10, 28, 55});
  }

  TEST_CASE("fifths family numerator on the table rows") {
    for (const auto& row : reference_fifths().rows) {
      Integer n = row.n;
      Integer m = row.multiplicities[0];
      std::vector<Rational> num{1, Rational(10 - n), Rational(1 - m), Rational(2 * m), Rational(-2 * m),
                                Rational(m - 1), Rational(n - 10), -1};
      CHECK_MESSAGE(hilbert_series(poly(row.vertices), 4).function.equals(rf(num, {{1, 3}, {5, 1}})), row.id);
    }
  }

  TEST_CASE("dual area and dual Ehrhart oracles on the corpus") {
    for (const auto& p : corpus()) {
      CHECK(anticanonical_degree(p) == oracle::dual_area2(p));
      auto h = hilbert_series(p, 5);
      for (int k = 0; k <= 5; ++k) CHECK(h.series[k] == Rational(oracle::dual_dilate_count(p, k)));
    }
  }

  TEST_CASE("degree is invariant under corpus mutations") {
    for (const auto& p : corpus())
      for (const auto& t : all_mutations(p)) CHECK(anticanonical_degree(t.raw_target) == anticanonical_degree(p));
  }

  TEST_CASE("shattering") {
    auto r = shattering_check({make_edge({-2, 3}, {-1, 3}), make_edge({-1, 3}, {1, 3})});
    CHECK(r.sum_Q.is_zero());
    CHECK(r.sum_A == 1);
    CHECK(r.tau.from == LatticePoint{-2, 3});
    CHECK(r.tau.to == LatticePoint{1, 3});

    auto t = shattering_check({make_edge({-3, 2}, {-1, 2}), make_edge({-1, 2}, {1, 2})});
    CHECK(t.sum_A == Rational(4, 2));
    CHECK(t.tau_is_T);

    auto single = shattering_check({make_edge({-5, -1}, {0, 1})});
    CHECK(single.sum_A == Rational(1, 5));
  }
}
