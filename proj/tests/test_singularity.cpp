#include "corpus.hpp"
#include "fano/error.hpp"
#include "fano/mutation.hpp"
#include "fano/singularity.hpp"

#include "doctest.h"

using namespace fano;
using namespace fano::test;

TEST_SUITE("singularity") {
  TEST_CASE("cone singularities") {
    CHECK(cone_singularity(make_edge({0, 1}, {1, 0})).is_smooth());
    CHECK(cone_singularity(make_edge({-5, -1}, {0, 1})) == QuotientSingularity(5, 1));
    // Length 2 at height 3: k = 2 forces a = 1.
    auto s = cone_singularity(make_edge({-1, 3}, {1, 3}));
    CHECK(s == QuotientSingularity(6, 1));
    CHECK(s.k() == 2);
    CHECK(s.r() == 3);
  }

  TEST_CASE("weights are canonical up to inverse") {
    CHECK(QuotientSingularity(7, 3) == QuotientSingularity(7, 5));
    CHECK(QuotientSingularity(7, 3).weight() == 3);
    CHECK_THROWS_AS(QuotientSingularity(6, 2), Error);
  }

  TEST_CASE("Hirzebruch-Jung fractions") {
    CHECK(hj_fraction(5, 1).entries == std::vector<Integer>{5});
    CHECK(hj_fraction(3, 1).entries == std::vector<Integer>{3});
    CHECK(hj_fraction(7, 4).entries == std::vector<Integer>{2, 4});
    CHECK_THROWS(hj_fraction(6, 4));
  }

  TEST_CASE("Hirzebruch-Jung re-evaluation, exhaustive to 200") {
    int count = 0;
    for (int p = 2; p <= 200; ++p)
      for (int q = 1; q < p; ++q) {
        if (gcd(p, q) != 1) continue;
        auto hj = hj_fraction(p, q);
        bool ok = hj.evaluate() == Rational(p, q);
        for (const auto& a : hj.entries) ok = ok && a >= 2;
        if (!ok) FAIL("hj " << p << "/" << q);
        ++count;
      }
    CHECK(count > 10000);
  }

  TEST_CASE("edge content") {
    auto e = make_edge({-1, 3}, {1, 3});
    auto c = edge_singularity_content(e);
    CHECK(c.n == 0);
    REQUIRE(c.residue);
    CHECK(*c.residue == QuotientSingularity(6, 1));

    auto h1 = make_edge({-1, 1}, {2, 1});
    auto c1 = edge_singularity_content(h1);
    CHECK(c1.n == 3);
    CHECK_FALSE(c1.residue);

    int slanted = 0;
    for (const auto& ed : edges(p115())) {
      auto ec = edge_singularity_content(ed);
      if (ed.height == 1) {
        CHECK(ec.n == 1);
        CHECK_FALSE(ec.residue);
        ++slanted;
      }
    }
    CHECK(slanted == 2);
  }

  TEST_CASE("singularity content") {
    auto sc = singularity_content(p115());
    CHECK(sc.n == 2);
    CHECK(sc.sorted_basket() == std::vector<QuotientSingularity>{QuotientSingularity(5, 1)});
    auto p = singularity_content(p2());
    CHECK(p.n == 3);
    CHECK(p.basket.empty());
    auto r = singularity_content(poly({{-1, 3}, {1, 3}, {0, -1}}));
    CHECK(r.n == 2);
    CHECK(r.sorted_basket() == std::vector<QuotientSingularity>{QuotientSingularity(6, 1)});
  }

  TEST_CASE("table rows have the listed content") {
    for (const auto* row : table_rows()) {
      auto sc = singularity_content(poly(row->vertices));
      CHECK_MESSAGE(sc.n == row->n, row->id);
    }
  }

  TEST_CASE("T and R singularities") {
    QuotientSingularity t(4, 1), f(5, 1), s(6, 1);
    CHECK(is_T_singularity(t));
    CHECK_FALSE(is_R_singularity(t));
    CHECK(is_R_singularity(f));
    CHECK_FALSE(is_T_singularity(f));
    CHECK(is_R_singularity(s));
    CHECK_FALSE(is_T_singularity(s));
  }

  TEST_CASE("every 1/nr^2(1,nrc-1) is a T-singularity") {
    for (int n = 1; n <= 6; ++n)
      for (int r = 2; r <= 6; ++r)
        for (int c = 1; c <= 6; ++c) {
          if (gcd(r, c) != 1) continue;
          QuotientSingularity q(n * r * r, n * r * c - 1);
          CHECK(is_T_singularity(q));
          CHECK(q.r() == r);
          CHECK(q.k() == n * r);
        }
  }

  TEST_CASE("local indices") {
    CHECK(max_local_index(poly({{-1, 3}, {1, 3}, {0, -1}})) == 3);
    CHECK(basket_max_index(parse_basket("1/5(1,1)")) == 5);
    CHECK(basket_max_index(parse_basket("1/3(1,1) + 1/6(1,1)")) == 3);
  }

  TEST_CASE("edge content arithmetic and the determinant identity on the corpus") {
    for (const auto& p : corpus())
      for (const auto& e : edges(p)) {
        auto ec = edge_singularity_content(e);
        Integer k0 = e.length - ec.n * e.height;
        CHECK(k0 >= 0);
        CHECK(k0 < e.height);
        CHECK(ec.residue.has_value() == (k0 != 0));
        CHECK(cone_singularity(e).order() == abs(cross(e.from, e.to)));
      }
  }

  TEST_CASE("content is invariant under every corpus mutation") {
    for (const auto& p : corpus()) {
      auto sc = singularity_content(p);
      for (const auto& t : all_mutations(p)) CHECK(singularity_content(t.raw_target).same_as(sc));
    }
  }

  TEST_CASE("basket parsing") {
    auto b = parse_basket("2x1/3(1,1) + 1/6");
    REQUIRE(b.size() == 3);
    CHECK(basket_to_string(b) == "2x1/3(1,1) + 1x1/6(1,1)");
    CHECK(parse_basket("").empty());
    CHECK_THROWS_AS(parse_basket("1/4(1,1)"), Error);
    CHECK_THROWS_AS(parse_basket("1/x"), Error);
  }
}
