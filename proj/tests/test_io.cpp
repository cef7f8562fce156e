#include "corpus.hpp"
#include "fano/error.hpp"
#include "fano/io.hpp"

#include "doctest.h"

using namespace fano;
using namespace fano::test;

TEST_SUITE("io") {
  TEST_CASE("polygon JSON round trip") {
    for (const auto& p : corpus()) CHECK(polygon_from_json(polygon_json(p)) == p);
    CHECK(polygon_from_json(Json::parse("[[0,1],[1,0],[-1,-1]]")) == p2());
  }

  TEST_CASE("bad polygons") {
    try {
      polygon_from_json(Json::parse(R"({"vertices": [[2,0],[0,1],[-1,-1]]})"));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NonPrimitiveVertex);
    }
    CHECK_THROWS_AS(polygon_from_json(Json::parse(R"({"vertices": [[1]]})")), Error);
  }

  TEST_CASE("analyze report") {
    auto j = analyze_json(p115());
    CHECK(j["degree"] == "49/5");
    CHECK(j["sc"]["n"] == 2);
    CHECK(j["sc"]["basket"].size() == 1);
    CHECK(j["hilbert"]["denominator"] == Json::parse("[[1,3],[5,1]]"));
    CHECK(j["minimal"] == true);
    auto k = analyze_json(p2());
    CHECK(k["degree"] == "9");
    CHECK(k["sc"]["n"] == 3);
    CHECK(k["sc"]["basket"].empty());
    CHECK(analyze_json(p115()).dump() == j.dump());
  }

  TEST_CASE("large integers survive as strings") {
    Integer big("123456789012345678901234567890");
    CHECK(integer_json(big).is_string());
    CHECK(integer_from_json(integer_json(big)) == big);
    CHECK(integer_json(Integer(-7)).is_number());
    CHECK(integer_from_json(integer_json(Integer(-7))) == -7);
  }

  TEST_CASE("SVG rendering") {
    auto count = [](const std::string& s, const std::string& what) {
      std::size_t n = 0;
      for (auto pos = s.find(what); pos != std::string::npos; pos = s.find(what, pos + 1)) ++n;
      return n;
    };
    Polygon r12 = poly(reference_thirds_sixths().rows[11].vertices);
    auto a = render_svg(r12);
    CHECK(a == render_svg(r12));
    CHECK(a.find("width=\"424.0\" height=\"184.0\"") != std::string::npos);
    CHECK(count(a, "<circle") == 11 * 5 + 1);
    CHECK(a.find("<polygon") < a.find("<circle"));

    auto s = render_svg(box());
    CHECK(s.find("width=\"104.0\" height=\"104.0\"") != std::string::npos);
    CHECK(s.find("cx=\"52.0\" cy=\"52.0\" r=\"9.0\"") != std::string::npos);

    auto t = render_svg(poly(reference_fifths().rows[11].vertices));
    CHECK(t.find("width=\"264.0\" height=\"424.0\"") != std::string::npos);
    CHECK(count(t, "<circle") == 7 * 11 + 1);
  }

  TEST_CASE("run JSON round trip keeps the configuration") {
    auto run = classify(BasketSpec::parse("1x1/6(1,1)"), {});
    auto j = run_json(run);
    auto back = run_from_json(j);
    CHECK(back.config_hash == run.config_hash);
    CHECK(back.inputs.size() == run.inputs.size());
    CHECK(j.dump().find("time") == std::string::npos);
    auto csv = table_csv(run, BasketSpec::parse("1x1/6(1,1)"));
    CHECK(csv.rfind("#,vertices,n,m,degree", 0) == 0);
    auto fam = classify(BasketSpec::parse("family:1/3+1/6"), {});
    CHECK(table_csv(fam, BasketSpec::parse("family:1/3+1/6")).rfind("#,vertices,n,m1,m2,degree", 0) == 0);
    CHECK(table_json(fam, BasketSpec::parse("family:1/3+1/6"))["rows"].size() == 14);
  }
}
