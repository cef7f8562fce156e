#include "fano/acceptance.hpp"

#include "fano/classify.hpp"
#include "fano/error.hpp"
#include "fano/invariants.hpp"
#include "fano/io.hpp"
#include "fano/laurent.hpp"
#include "fano/mutation.hpp"
#include "fano/oracles.hpp"
#include "fano/reference.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace fano {

namespace {

// Collects failed checks; the criterion passes when none failed.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string summary(const std::string& extra = {}) const {
    std::ostringstream os;
    os << (total_ - failures_.size()) << "/" << total_ << " checks";
    if (!extra.empty()) os << "; " << extra;
    for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) os << "; FAIL " << failures_[i];
    return os.str();
  }

 private:
  std::size_t total_ = 0;
  std::vector<std::string> failures_;
};

Polygon hull(const std::vector<LatticePoint>& v) { return convex_hull(v); }

RationalFunction1 rf(std::vector<Rational> num, RationalFunction1::Denominator den) {
  return RationalFunction1(UPoly(std::move(num)), std::move(den));
}

CriterionResult invariant_fixtures() {
  Checks c;
  const Polygon p115 = hull({{0, 1}, {1, 0}, {-5, -1}});
  c.expect(anticanonical_degree(p115) == Rational(49, 5), "degree of P(1,1,5)");
  auto hs = hilbert_series(p115, 8);
  auto expected = rf({1, 8, 0, 2, -2, 0, -8, -1}, {{1, 3}, {5, 1}});
  c.expect(hs.function.equals(expected), "Hilbert series of P(1,1,5)");
  c.expect(hs.function.denominator() == expected.denominator() && hs.function.numerator() == expected.numerator(),
           "Hilbert series printed form");

  auto sc_is = [&](const Polygon& p, int n, const std::string& basket, const std::string& what) {
    auto sc = singularity_content(p);
    c.expect(sc.n == n && sc.sorted_basket() == parse_basket(basket), what);
  };
  sc_is(p115, 2, "1/5(1,1)", "SC of P(1,1,5)");
  const auto& t1 = reference_thirds_sixths().rows.front();
  const auto& t2 = reference_fifths().rows.front();
  sc_is(hull(t1.vertices), 2, "1/6(1,1)", "SC of row 1.1");
  sc_is(hull(t2.vertices), 2, "1/5(1,1)", "SC of row 2.1");

  const QuotientSingularity s3(3, 1), s5(5, 1), s6(6, 1);
  c.expect(degree_contribution(s3) == Rational(5, 3), "A(1/3)");
  c.expect(degree_contribution(s5) == Rational(1, 5), "A(1/5)");
  c.expect(degree_contribution(s6) == Rational(-2, 3), "A(1/6)");
  c.expect(riemann_roch_term(s3).equals(rf({0, Rational(-1, 3)}, {{3, 1}})), "Q(1/3)");
  c.expect(riemann_roch_term(s5).equals(rf({0, Rational(1, 5), Rational(-2, 5), Rational(1, 5)}, {{5, 1}})), "Q(1/5)");
  c.expect(riemann_roch_term(s6).equals(rf({0, Rational(1, 3)}, {{3, 1}})), "Q(1/6)");

  auto sh = shattering_check({make_edge({-2, 3}, {-1, 3}), make_edge({-1, 3}, {1, 3})});
  c.expect(sh.sum_Q.is_zero(), "shattering sum of Q");
  c.expect(sh.sum_A == 1, "shattering sum of A");
  return {1, "invariant fixtures", c.ok(), c.summary()};
}

const Polygon& source_polygon() {
  static const Polygon p = convex_hull(std::vector<LatticePoint>{{0, 1}, {1, 0}, {-5, -1}});
  return p;
}

EdgeData fixture_edge() { return make_edge({0, 1}, {1, 0}); }

CriterionResult mutation_fixture() {
  Checks c;
  const Polygon& p = source_polygon();
  auto t = mutate(p, mutation_spec(fixture_edge()));
  const Polygon want = hull({{0, 1}, {-5, -1}, {1, -7}});
  c.expect(t.raw_target == want, "image is " + t.raw_target.str());
  auto back = mutate(t.raw_target, mutation_spec(oracle::edge_with_normal(t.raw_target, -fixture_edge().inner_normal)));
  c.expect(back.target == normal_form(p), "inverse returns the source class");
  return {2, "mutation fixture", c.ok(), c.summary("image " + t.raw_target.str())};
}

CriterionResult minimality_fixture() {
  Checks c;
  const Polygon& p = source_polygon();
  const Polygon q = mutate_polygon(p, fixture_edge());
  c.expect(is_minimal(p), "source minimal");
  c.expect(!is_minimal(q), "image not minimal");
  auto m = minimize(q);
  c.expect(normal_form(m.minimal) == normal_form(p), "minimize recovers the source class");
  c.expect(minimality_witnesses(p).concordant() && minimality_witnesses(q).concordant(), "witnesses agree");
  return {3, "minimality", c.ok(), c.summary("minimize took " + std::to_string(m.path.size()) + " step(s)")};
}

CriterionResult reproduce(int id, const ReferenceFamily& ref) {
  Checks c;
  auto spec = BasketSpec::parse(ref.basket);
  auto run = classify(spec, SearchBounds{}, EquivalenceBudget{});
  c.expect(run.complete, "run complete");
  c.expect(run.rows.size() == ref.rows.size(),
           std::to_string(run.rows.size()) + " classes, expected " + std::to_string(ref.rows.size()));

  using Key = std::tuple<Integer, std::vector<unsigned>, Rational>;
  std::multiset<Key> got, want;
  for (const auto& r : run.rows) got.insert({r.n, r.multiplicities, r.degree});
  for (const auto& r : ref.rows) want.insert({r.n, r.multiplicities, r.degree});
  c.expect(got == want, "(n, multiplicities, degree) multiset");

  std::set<std::size_t> used;
  std::size_t shown = 0;
  for (const auto& r : ref.rows) {
    Polygon p = hull(r.vertices);
    c.expect(singularity_content(p).n == r.n && anticanonical_degree(p) == r.degree, r.id + " invariants");
    Polygon nf = normal_form(p);
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < run.rows.size(); ++i) {
      const auto& m = run.rows[i].members;
      if (std::find(m.begin(), m.end(), nf) != m.end()) hit = i;
    }
    if (!hit) {
      c.expect(false, r.id + " not found");
      continue;
    }
    const auto& row = run.rows[*hit];
    c.expect(used.insert(*hit).second, r.id + " shares a class");
    c.expect(row.n == r.n && row.multiplicities == r.multiplicities && row.degree == r.degree, r.id + " row data");
    if (normal_form(row.representative) == nf) ++shown;
  }
  std::size_t unresolved = 0;
  for (const auto& s : run.separations) unresolved += s.kind == SeparationKind::Unresolved;
  c.expect(unresolved == 0, std::to_string(unresolved) + " unresolved class pairs");
  std::ostringstream extra;
  extra << run.rows.size() << " classes, " << run.outputs.size() << " minimal polygons; every table polygon in its own class; "
        << shown << "/" << ref.rows.size() << " displayed polygons equal the table's";
  return {id, ref.basket + " classification", c.ok(), c.summary(extra.str())};
}

CriterionResult separation_evidence() {
  Checks c;
  std::map<std::string, PeriodPrefix> prefixes;
  for (const auto& f : period_fixtures()) {
    auto pre = f.prefix(5);
    c.expect(pre.values.size() == 6 && pre.values == f.printed_prefix().values, f.id + " prefix through x^5");
    prefixes.emplace(f.id, pre);
  }
  std::string extra;
  for (auto [a, b] : {std::pair{"1.7", "1.8"}, std::pair{"2.6", "2.7"}}) {
    auto cmp = periods_distinct(prefixes.at(a), prefixes.at(b));
    c.expect(cmp.verdict == PeriodVerdict::Distinct, std::string(a) + " vs " + b);
    extra += std::string(extra.empty() ? "" : ", ") + a + "/" + b + " " + to_string(cmp.verdict) + " at pi_" +
             std::to_string(cmp.witness);
  }
  return {6, "separation evidence", c.ok(), c.summary(extra)};
}

std::vector<Polygon> table_polygons() {
  std::vector<Polygon> out;
  for (const auto* f : {&reference_thirds_sixths(), &reference_fifths()})
    for (const auto& r : f->rows) out.push_back(hull(r.vertices));
  return out;
}

CriterionResult property_suites(const AcceptanceOptions& o) {
  Checks c;
  std::mt19937_64 rng(o.seed);
  const std::size_t n = o.property_cases;
  std::map<std::string, std::size_t> cases;

  for (std::size_t i = 0; i < n; ++i) {
    Polygon p = oracle::random_fano_polygon(rng, 6, 200);
    auto bf = oracle::brute_force_counts(p);
    bool ok = bf.boundary == boundary_count(p) && bf.interior == interior_count(p) &&
              area2(p) == 2 * bf.interior + bf.boundary - 2;
    c.expect(ok, "Pick on " + p.str());
    ++cases["pick"];
  }

  for (std::size_t i = 0; i < n; ++i) {
    Polygon p = oracle::random_fano_polygon(rng, 6, 200);
    auto u = oracle::random_unimodular(rng);
    c.expect(normal_form(transform(p, u)) == normal_form(p), "normal form of " + p.str());
    ++cases["normal form"];
  }

  for (std::size_t done = 0; done < n;) {
    Polygon p = oracle::random_fano_polygon(rng, 5, 120);
    std::vector<EdgeData> adm;
    for (const auto& e : edges(p))
      if (admissible(p, e)) adm.push_back(e);
    if (adm.empty()) continue;
    const EdgeData e = adm[std::uniform_int_distribution<std::size_t>(0, adm.size() - 1)(rng)];
    try {
      auto t = mutate(p, mutation_spec(e));
      c.expect(t.raw_target == oracle::brute_force_mutation(p, e), "slicer oracle on " + p.str());
      c.expect(singularity_content(t.raw_target).same_as(singularity_content(p)), "SC invariance on " + p.str());
      auto back = mutate(t.raw_target, mutation_spec(oracle::edge_with_normal(t.raw_target, -e.inner_normal)));
      c.expect(back.target == normal_form(p), "involution on " + p.str());
    } catch (const Error& err) {
      c.expect(false, "mutation of " + p.str() + ": " + err.what());
    }
    ++done;
    ++cases["mutation"];
  }

  std::vector<Polygon> dual_cases = table_polygons();
  while (dual_cases.size() < n + 26) dual_cases.push_back(oracle::random_fano_polygon(rng, 4, 80));
  for (std::size_t i = 0; i < dual_cases.size(); ++i) {
    const Polygon& p = dual_cases[i];
    c.expect(anticanonical_degree(p) == oracle::dual_area2(p), "degree vs dual area on " + p.str());
    auto hs = hilbert_series(p, 5);
    bool ok = true;
    for (std::int64_t k = 0; k <= 5; ++k) ok = ok && hs.series[k] == Rational(oracle::dual_dilate_count(p, k));
    c.expect(ok, "Hilbert vs dual Ehrhart on " + p.str());
    ++cases["dual"];
  }

  for (std::size_t i = 0; i < n; ++i) {
    Polygon p = oracle::random_fano_polygon(rng, 5, 60);
    auto w = minimality_witnesses(p);
    c.expect(w.concordant(), "minimality concordance on " + p.str());
    ++cases["minimality"];
  }

  std::string extra;
  for (const auto& [k, v] : cases) extra += (extra.empty() ? "" : ", ") + k + " " + std::to_string(v);
  return {7, "property suites", c.ok(), c.summary(extra + " cases (dual includes the 26 table polygons)")};
}

CriterionResult determinism(const AcceptanceOptions& o) {
  Checks c;
  auto spec = BasketSpec::parse("family:1/3+1/6");
  auto once = [&](int threads, bool parallel) {
    int saved = omp_get_max_threads();
    omp_set_num_threads(threads);
    ClassifyOptions opt;
    opt.parallel = parallel;
    auto run = classify(spec, SearchBounds{}, EquivalenceBudget{}, opt);
    omp_set_num_threads(saved);
    return run_json(run).dump(2);
  };
  std::string a = once(o.threads_a, false), b = once(o.threads_b, true), d = once(o.threads_b, true);
  c.expect(a == b, "serial vs " + std::to_string(o.threads_b) + " threads");
  c.expect(b == d, "repeated parallel run");
  return {8, "determinism", c.ok(), c.summary(std::to_string(a.size()) + " bytes of result JSON")};
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    switch (id) {
      case 1: r = invariant_fixtures(); break;
      case 2: r = mutation_fixture(); break;
      case 3: r = minimality_fixture(); break;
      case 4: r = reproduce(4, reference_thirds_sixths()); break;
      case 5: r = reproduce(5, reference_fifths()); break;
      case 6: r = separation_evidence(); break;
      case 7: r = property_suites(options); break;
      case 8: r = determinism(options); break;
      default: throw Error(ErrorKind::OutOfRange, "no criterion " + std::to_string(id));
    }
  } catch (const Error& e) {
    if (id < 1 || id > 8) throw;
    r = {id, "criterion " + std::to_string(id), false, std::string("error: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 8; ++id) out.push_back(run_criterion(id, options));
  return out;
}

}  // namespace fano
