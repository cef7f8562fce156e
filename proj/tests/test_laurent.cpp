#include "corpus.hpp"
#include "fano/error.hpp"
#include "fano/io.hpp"
#include "fano/laurent.hpp"

#include "doctest.h"

#include <random>

using namespace fano;
using namespace fano::test;

namespace {

const PeriodFixture& fixture(const std::string& id) {
  for (const auto& f : period_fixtures())
    if (f.id == id) return f;
  throw Error(ErrorKind::ParseError, id);
}

std::vector<std::string> strs(const PeriodPrefix& p) {
  std::vector<std::string> out;
  for (const auto& v : p.values) out.push_back(v.str());
  return out;
}

}  // namespace

TEST_SUITE("laurent") {
  TEST_CASE("coefficient polynomials") {
    auto p = parse_coeff_poly("2*a + 3*b^2 - 1/2");
    CHECK(p.parameters() == std::set<std::string>{"a", "b"});
    CHECK((p - p).is_zero());
    CHECK(parse_coeff_poly("a*a").str() == "a^2");
    auto s = p.specialize({{"a", 1}, {"b", 2}});
    REQUIRE(s.as_constant());
    CHECK(*s.as_constant() == Rational(27, 2));
  }

  TEST_CASE("parsing Laurent polynomials") {
    auto f = parse_laurent("x + y + x^-1*y^-1");
    CHECK(f.terms().size() == 3);
    CHECK(parse_laurent("x + y + x^(-1)*y^(-1)") == f);
    CHECK_THROWS_AS(parse_laurent("x + + y"), Error);
  }

  TEST_CASE("periods of the plane") {
    auto p = period_prefix(parse_laurent("x + y + x^-1*y^-1"), 6);
    CHECK(strs(p) == std::vector<std::string>{"1", "0", "0", "6", "0", "0", "90"});
  }

  TEST_CASE("shipped fixtures reproduce the printed periods") {
    for (const auto& f : period_fixtures()) {
      auto pre = f.prefix(5);
      CHECK_MESSAGE(pre.values == f.printed_prefix().values, f.id);
    }
    CHECK(strs(fixture("1.7").prefix(5))[4] == "6*a^2 + 24*a + 4*c + 186");
    CHECK(strs(fixture("1.8").prefix(5))[5] == "420*a + 30*b");
    CHECK(fixture("2.6").fixture_only());
    CHECK(fixture("2.7").fixture_only());
  }

  TEST_CASE("separation verdicts") {
    auto a = periods_distinct(fixture("1.7").prefix(5), fixture("1.8").prefix(5));
    CHECK(a.verdict == PeriodVerdict::Distinct);
    CHECK(a.witness == 2);
    CHECK(periods_distinct(fixture("2.6").prefix(), fixture("2.7").prefix()).verdict == PeriodVerdict::Distinct);
    auto f = parse_laurent(*fixture("1.7").laurent);
    CHECK(periods_distinct(f, f, 5).verdict == PeriodVerdict::Inconclusive);
    // A renaming of parameters is not a difference.
    auto g = f.rename({{"a", "p"}, {"b", "q"}, {"c", "r"}});
    CHECK(periods_distinct(f, g, 5).verdict == PeriodVerdict::Inconclusive);
  }

  TEST_CASE("Newton polygons") {
    auto f = parse_laurent(*fixture("1.7").laurent);
    CHECK(newton_polygon(f) == poly(fixture("1.7").vertices));
    CHECK(newton_polygon(parse_laurent("x + y + x^-1*y^-1")) == p2());
    try {
      newton_polygon(parse_laurent("3"));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotFullDimensional);
    }
  }

  TEST_CASE("pruned and dense periods agree to order 6") {
    for (const auto& f : period_fixtures()) {
      if (f.fixture_only()) continue;
      auto lp = parse_laurent(*f.laurent);
      CHECK(period_prefix(lp, 6).values == period_prefix_dense(lp, 6).values);
    }
    auto p2f = parse_laurent("x + 2*y + 1/3*x^-1*y^-1 + x^-1");
    CHECK(period_prefix(p2f, 6).values == period_prefix_dense(p2f, 6).values);
  }

  TEST_CASE("specialization commutes with periods") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-4, 4);
    for (const auto& f : period_fixtures()) {
      if (f.fixture_only()) continue;
      auto lp = parse_laurent(*f.laurent);
      for (int trial = 0; trial < 5; ++trial) {
        std::map<std::string, Rational> vals;
        for (const auto& name : lp.parameters()) vals[name] = Rational(d(rng), 1 + (d(rng) & 3));
        auto lhs = period_prefix(lp.specialize(vals), 5);
        auto rhs = period_prefix(lp, 5);
        for (std::size_t n = 0; n <= 5; ++n) CHECK(lhs.values[n] == rhs.values[n].specialize(vals));
      }
    }
  }

  TEST_CASE("support in an open half-plane has no constant terms") {
    auto f = parse_laurent("x + a*y + x^2*y^-1 + 3*x*y");
    auto p = period_prefix(f, 6);
    for (std::size_t n = 1; n <= 6; ++n) CHECK(p.values[n].is_zero());
    auto q = period_prefix_dense(f, 6);
    for (std::size_t n = 1; n <= 6; ++n) CHECK(q.values[n].is_zero());
  }

  TEST_CASE("data files match the compiled fixtures") {
    const std::string dir = std::string(FANO_DATA_DIR) + "/periods/";
    auto j = Json::parse(read_text_file(dir + "fixtures.json"));
    REQUIRE(j.size() == period_fixtures().size());
    for (std::size_t i = 0; i < j.size(); ++i) {
      const auto& f = period_fixtures()[i];
      const auto& e = j[i];
      CHECK(e["id"] == f.id);
      CHECK(e["partner"] == f.partner);
      CHECK(e["printed"].get<std::vector<std::string>>() == f.printed);
      CHECK(e["renaming"].get<std::map<std::string, std::string>>() == f.renaming);
      std::vector<LatticePoint> v;
      for (const auto& p : e["vertices"]) v.push_back({p[0].get<int>(), p[1].get<int>()});
      CHECK(v == f.vertices);
      if (e["laurent"].is_null()) {
        CHECK(f.fixture_only());
      } else {
        REQUIRE(f.laurent);
        CHECK(parse_laurent(read_text_file(dir + e["laurent"].get<std::string>())) == parse_laurent(*f.laurent));
      }
    }
  }
}
