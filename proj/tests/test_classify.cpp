#include "corpus.hpp"
#include "fano/classify.hpp"
#include "fano/error.hpp"
#include "fano/invariants.hpp"
#include "fano/io.hpp"
#include "fano/mutation.hpp"

#include "doctest.h"

#include <omp.h>

#include <algorithm>
#include <set>

using namespace fano;
using namespace fano::test;

namespace {

const std::vector<QuotientSingularity> one_sixth = parse_basket("1/6(1,1)");
const std::vector<QuotientSingularity> one_fifth = parse_basket("1/5(1,1)");

bool contains_nf(const std::vector<Polygon>& ps, const Polygon& p) {
  Polygon nf = normal_form(p);
  return std::any_of(ps.begin(), ps.end(), [&](const Polygon& q) { return normal_form(q) == nf; });
}

std::string dump(const ClassificationRun& r) { return run_json(r).dump(); }

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("special facets") {
    auto s = special_facets(p115());
    REQUIRE(s.size() == 1);
    CHECK(vertex_sum(p115()) == LatticePoint{-4, 0});
    bool match = (s[0].from == LatticePoint{-5, -1} && s[0].to == LatticePoint{0, 1}) ||
                 (s[0].from == LatticePoint{0, 1} && s[0].to == LatticePoint{-5, -1});
    CHECK(match);
    CHECK(special_facets(square()).size() == 4);
    CHECK(special_facets(p2()).size() == 3);
    for (const auto& p : corpus()) CHECK_FALSE(special_facets(p).empty());
  }

  TEST_CASE("basket specs") {
    auto f = BasketSpec::parse("family:1/3+1/6");
    CHECK(f.family);
    auto bs = f.baskets(2);
    CHECK(bs.size() == 3);
    for (const auto& b : bs) CHECK(f.multiplicities(b)[1] >= 1);
    CHECK(BasketSpec::parse("family:1/5").baskets(2).size() == 2);
    auto e = BasketSpec::parse("1x1/6(1,1)");
    CHECK_FALSE(e.family);
    CHECK(e.baskets(2).size() == 1);
    try {
      BasketSpec::parse("family:");
      FAIL("expected an error");
    } catch (const Error& err) {
      CHECK((err.kind() == ErrorKind::ConfigError || err.kind() == ErrorKind::ParseError));
    }
  }

  TEST_CASE("default bounds") {
    CHECK(default_n_max(parse_basket("1/6")) == 12);
    CHECK(default_n_max(parse_basket("2x1/6")) == 13);
    CHECK(default_n_max(parse_basket("1/3+1/6")) == 10);
    CHECK(default_n_max(one_fifth) == 11);
    CHECK(default_n_max(parse_basket("2x1/5")) == 11);
    CHECK(effective_height_cap(one_fifth, {}) == 10);
    SearchBounds strict;
    strict.t_height_max = 1;
    CHECK(effective_height_cap(one_fifth, strict) == 5);
  }

  TEST_CASE("facet inputs") {
    auto in6 = enumerate_facet_inputs(one_sixth);
    CHECK(std::find(in6.begin(), in6.end(), SpecialFacetInput{3, -1, 1}) != in6.end());
    auto in5 = enumerate_facet_inputs(one_fifth);
    CHECK(std::find(in5.begin(), in5.end(), SpecialFacetInput{5, -3, -2}) != in5.end());
    for (const auto& in : in6) {
      auto e = make_edge({in.a, in.l}, {in.b, in.l});
      auto ec = edge_singularity_content(e);
      bool ok = !ec.residue || std::find(one_sixth.begin(), one_sixth.end(), *ec.residue) != one_sixth.end();
      CHECK(ok);
      CHECK(-in.l < in.a);
      CHECK(in.a <= 0);
    }
  }

  TEST_CASE("growth from the table facets") {
    auto a = grow({3, -1, 1}, one_sixth, 12);
    CHECK(contains_nf(a, poly({{-1, 3}, {1, 3}, {0, -1}})));
    auto b = grow({5, -3, -2}, one_fifth, 11);
    CHECK(contains_nf(b, poly({{-3, 5}, {-2, 5}, {1, -2}})));
  }

  TEST_CASE("region rows") {
    SearchRegion r({3, -1, 1}, 3);
    CHECK(r.y_max == 2);
    CHECK(r.y_min == -12);
    CHECK(r.contains(0, -1));
    CHECK_FALSE(r.contains(100, 0));
    for (const auto& q : r.primitive_points()) CHECK(r.contains(static_cast<std::int64_t>(q.x), static_cast<std::int64_t>(q.y)));
  }

  TEST_CASE("outputs satisfy the filters and the containment bound") {
    for (const auto* basket : {&one_sixth, &one_fifth}) {
      std::int64_t mB = static_cast<std::int64_t>(basket_max_index(*basket));
      SearchBounds bounds;
      std::int64_t cap = effective_height_cap(*basket, bounds);
      for (const auto& in : enumerate_facet_inputs(*basket, 0, cap))
        for (const auto& p : grow(in, *basket, default_n_max(*basket), 0, nullptr, cap)) {
          auto sc = singularity_content(p);
          CHECK(sc.sorted_basket() == *basket);
          CHECK(is_minimal(p));
          CHECK(max_local_index(p) <= cap);
          CHECK(max_local_index(p) >= mB);
          for (const auto& e : edges(p))
            if (edge_singularity_content(e).residue) CHECK(e.height <= mB);
          auto f = make_edge({in.a, in.l}, {in.b, in.l});
          auto sf = special_facets(p);
          bool found = std::any_of(sf.begin(), sf.end(), [&](const EdgeData& e) { return e.from == f.from && e.to == f.to; });
          CHECK(found);
          for (const auto& v : p.vertices()) {
            CHECK(v.y <= in.l);
            CHECK(v.y >= -in.l * (in.l + 1));
          }
        }
    }
  }

  TEST_CASE("strict search keeps m_P = m_B") {
    SearchBounds strict;
    strict.t_height_max = 5;
    for (const auto& in : enumerate_facet_inputs(one_fifth, 0, 5))
      for (const auto& p : grow(in, one_fifth, 11, 0, nullptr, 5)) CHECK(max_local_index(p) == 5);
  }

  TEST_CASE("widening the region finds nothing new") {
    for (const auto* basket : {&one_sixth, &one_fifth}) {
      std::int64_t cap = effective_height_cap(*basket, {});
      std::set<Polygon> base, wide;
      for (const auto& in : enumerate_facet_inputs(*basket, 0, cap))
        for (const auto& p : grow(in, *basket, default_n_max(*basket), 0, nullptr, cap)) base.insert(normal_form(p));
      for (const auto& in : enumerate_facet_inputs(*basket, 1, cap))
        for (const auto& p : grow(in, *basket, default_n_max(*basket), 1, nullptr, cap)) wide.insert(normal_form(p));
      CHECK(base == wide);
    }
  }

  TEST_CASE("single basket restricted to n = 2") {
    SearchBounds b;
    b.n_max = Integer(2);
    auto run = classify(BasketSpec::parse("1x1/6(1,1)"), b);
    REQUIRE(run.rows.size() == 1);
    CHECK(contains_nf(run.rows[0].members, poly({{-1, 3}, {1, 3}, {0, -1}})));
  }

  TEST_CASE("equivalence classes") {
    auto part = equivalence_classes({p115(), p115_image()});
    REQUIRE(part.classes.size() == 1);
    REQUIRE(part.classes[0].merges.size() == 1);
    CHECK(part.classes[0].merges[0].path.size() == 2);

    auto single = equivalence_classes({p2()});
    CHECK(single.classes.size() == 1);
    CHECK(single.separations.empty());

    auto r17 = poly(reference_thirds_sixths().rows[6].vertices);
    auto r18 = poly(reference_thirds_sixths().rows[7].vertices);
    auto sep = equivalence_classes({normal_form(r17), normal_form(r18)});
    REQUIRE(sep.classes.size() == 2);
    REQUIRE(sep.separations.size() == 1);
    CHECK(sep.separations[0].kind == SeparationKind::PeriodFixture);
  }

  TEST_CASE("no two outputs share a normal form") {
    auto run = classify(BasketSpec::parse("1x1/6(1,1)"), {});
    std::set<Polygon> seen;
    for (const auto& p : run.outputs) CHECK(seen.insert(normal_form(p)).second);
    for (const auto& row : run.rows)
      for (const auto& m : row.members) CHECK(std::count(run.outputs.begin(), run.outputs.end(), m) == 1);
  }

  TEST_CASE("serial and parallel runs agree") {
    auto spec = BasketSpec::parse("family:1/3+1/6");
    ClassifyOptions serial;
    serial.parallel = false;
    auto a = classify(spec, {}, {}, serial);
    int saved = omp_get_max_threads();
    omp_set_num_threads(4);
    auto b = classify(spec, {}, {}, {});
    omp_set_num_threads(saved);
    CHECK(dump(a) == dump(b));
    CHECK(a.rows.size() == 14);

    auto pa = equivalence_classes(a.outputs, {}, false);
    auto pb = equivalence_classes(a.outputs, {}, true);
    REQUIRE(pa.classes.size() == pb.classes.size());
    for (std::size_t i = 0; i < pa.classes.size(); ++i) CHECK(pa.classes[i].members == pb.classes[i].members);
  }

  TEST_CASE("resume after interruption matches an uninterrupted run") {
    auto spec = BasketSpec::parse("family:1/3+1/6");
    auto full = classify(spec, {});
    ClassifyOptions stop;
    stop.max_inputs = 7;
    auto part = classify(spec, {}, {}, stop);
    CHECK_FALSE(part.complete);
    CHECK(part.rows.empty());
    auto reloaded = run_from_json(Json::parse(dump(part)));
    ClassifyOptions resume;
    resume.resume = &reloaded;
    resume.max_inputs = 5;
    auto more = classify(spec, {}, {}, resume);
    CHECK_FALSE(more.complete);
    auto reloaded2 = run_from_json(Json::parse(dump(more)));
    ClassifyOptions last;
    last.resume = &reloaded2;
    auto done = classify(spec, {}, {}, last);
    CHECK(done.complete);
    CHECK(dump(done) == dump(full));
  }

  TEST_CASE("resume refuses a different configuration") {
    auto spec = BasketSpec::parse("1x1/6(1,1)");
    ClassifyOptions stop;
    stop.max_inputs = 1;
    auto part = classify(spec, {}, {}, stop);
    SearchBounds other;
    other.n_max = Integer(3);
    ClassifyOptions resume;
    resume.resume = &part;
    try {
      classify(spec, other, {}, resume);
      FAIL("expected ConfigError");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ConfigError);
    }
  }

  TEST_CASE("bounds misconfiguration") {
    SearchBounds b;
    b.mult_max = 0;
    CHECK_THROWS_AS(classify(BasketSpec::parse("family:1/5"), b), Error);
    SearchBounds c;
    c.region_expand = -1;
    CHECK_THROWS_AS(classify(BasketSpec::parse("family:1/5"), c), Error);
  }
}
