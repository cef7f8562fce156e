#include "corpus.hpp"
#include "fano/error.hpp"
#include "fano/mutation.hpp"
#include "fano/oracles.hpp"
#include "fano/singularity.hpp"

#include "doctest.h"

#include <random>
#include <set>

using namespace fano;
using namespace fano::test;

namespace {

EdgeData edge_of(const Polygon& p, LatticePoint a, LatticePoint b) {
  for (const auto& e : edges(p))
    if ((e.from == a && e.to == b) || (e.from == b && e.to == a)) return e;
  FAIL("no such edge");
  return make_edge(a, b);
}

}  // namespace

TEST_SUITE("mutation") {
  TEST_CASE("admissibility") {
    Polygon p = p115();
    CHECK(admissible(p, edge_of(p, {1, 0}, {0, 1})));
    // Height 5, length 1.
    CHECK_FALSE(admissible(p, edge_of(p, {0, 1}, {-5, -1})));
    CHECK(admissible(p, edge_of(p, {1, 0}, {-5, -1})));
    for (const auto& q : corpus())
      for (const auto& e : edges(q))
        if (e.height == 1) CHECK(admissible(q, e));
  }

  TEST_CASE("literal admissibility differs only at length = height - 1") {
    for (const auto& q : corpus())
      for (const auto& e : edges(q))
        if (admissible(q, e) != admissible_literal(q, e)) CHECK(e.length + 1 == e.height);
  }

  TEST_CASE("the weighted plane mutation") {
    Polygon p = p115();
    MutationSpec spec{edge_of(p, {0, 1}, {1, 0}), {1, -1}};
    CHECK(spec.edge.inner_normal == DualVector{-1, -1});
    auto t = mutate(p, spec);
    CHECK(t.raw_target == p115_image());
    CHECK(t.target == normal_form(p115_image()));
    auto back = mutate(t.raw_target, {oracle::edge_with_normal(t.raw_target, {1, 1}), {1, -1}});
    CHECK(back.target == normal_form(p));
  }

  TEST_CASE("inadmissible edges are rejected") {
    Polygon p = p115();
    auto e = edge_of(p, {0, 1}, {-5, -1});
    try {
      mutate(p, mutation_spec(e));
      FAIL("expected NotAdmissible");
    } catch (const Error& err) {
      CHECK(err.kind() == ErrorKind::NotAdmissible);
    }
  }

  TEST_CASE("the plane mutates to P(1,1,4)") {
    auto ms = all_mutations(p2());
    CHECK(ms.size() == 3);
    std::set<Polygon> targets;
    for (const auto& t : ms) {
      targets.insert(t.target);
      CHECK(t.raw_target == oracle::brute_force_mutation(p2(), t.spec.edge));
      CHECK(singularity_content(t.raw_target).n == 3);
      CHECK(singularity_content(t.raw_target).basket.empty());
    }
    CHECK(targets.size() == 1);
    CHECK(*targets.begin() == normal_form(poly({{0, 1}, {1, 0}, {-1, -4}})));
  }

  TEST_CASE("mutation counts") {
    CHECK(all_mutations(p115()).size() == 2);
    auto sq = all_mutations(square());
    CHECK(sq.size() == 4);
    std::set<Polygon> t;
    for (const auto& m : sq) t.insert(m.target);
    CHECK(t.size() == 1);
  }

  TEST_CASE("involution, Fano preservation and the slicer oracle on the corpus") {
    for (const auto& p : corpus())
      for (const auto& t : all_mutations(p)) {
        CHECK(t.raw_target == oracle::brute_force_mutation(p, t.spec.edge));
        CHECK(t.target == normal_form(t.raw_target));
        auto inv = oracle::edge_with_normal(t.raw_target, -t.spec.edge.inner_normal);
        CHECK(admissible(t.raw_target, inv));
        CHECK(mutate(t.raw_target, mutation_spec(inv)).target == normal_form(p));
      }
  }

  TEST_CASE("random mutations against the slicer oracle") {
    std::mt19937_64 rng(11);
    int done = 0;
    while (done < 300) {
      Polygon p = oracle::random_fano_polygon(rng, 5, 150);
      for (const auto& t : all_mutations(p)) {
        CHECK(t.raw_target == oracle::brute_force_mutation(p, t.spec.edge));
        ++done;
      }
    }
  }

  TEST_CASE("minimality") {
    CHECK(is_minimal(p115()));
    CHECK_FALSE(is_minimal(p115_image()));
    CHECK(is_minimal(square()));
    CHECK(boundary_count(p115_image()) > boundary_count(p115()));
  }

  TEST_CASE("minimize") {
    auto r = minimize(p115_image());
    CHECK(normal_form(r.minimal) == normal_form(p115()));
    CHECK(r.path.size() == 1);
    auto s = minimize(p115());
    CHECK(s.path.empty());
    CHECK(normal_form(s.minimal) == normal_form(p115()));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
      Polygon p = oracle::random_fano_polygon(rng, 6, 200);
      auto m = minimize(p);
      CHECK(is_minimal(m.minimal));
      CHECK(singularity_content(m.minimal).same_as(singularity_content(p)));
    }
  }

  TEST_CASE("minimality witnesses") {
    auto a = minimality_witnesses(p115());
    CHECK(a.concordant());
    CHECK(a.by_boundary);
    auto b = minimality_witnesses(p115_image());
    CHECK(b.concordant());
    CHECK_FALSE(b.by_boundary);
    auto c = minimality_witnesses(square());
    CHECK(c.concordant());
    CHECK(c.by_boundary);
  }

  TEST_CASE("minimality concordance on 500 random small polygons") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 500; ++i) {
      Polygon p = oracle::random_fano_polygon(rng, 5, 60);
      CHECK_MESSAGE(minimality_witnesses(p).concordant(), p.str());
    }
  }
}
