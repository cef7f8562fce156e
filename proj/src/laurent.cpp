#include "fano/laurent.hpp"

#include "fano/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace fano {

// ---------------------------------------------------------------- CoeffPoly

CoeffPoly::CoeffPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

CoeffPoly CoeffPoly::variable(const std::string& name) {
  CoeffPoly p;
  p.terms_.emplace(Monomial{{name, 1}}, Rational(1));
  return p;
}

std::optional<Rational> CoeffPoly::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

std::set<std::string> CoeffPoly::parameters() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [name, e] : m) out.insert(name);
  return out;
}

void CoeffPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CoeffPoly CoeffPoly::operator+(const CoeffPoly& o) const {
  CoeffPoly r = *this;
  r += o;
  return r;
}

CoeffPoly CoeffPoly::operator-(const CoeffPoly& o) const {
  CoeffPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

CoeffPoly CoeffPoly::operator*(const CoeffPoly& o) const {
  CoeffPoly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m = m1;
      for (const auto& [name, e] : m2) m[name] += e;
      r.add_term(m, c1 * c2);
    }
  return r;
}

CoeffPoly CoeffPoly::rename(const std::map<std::string, std::string>& names) const {
  CoeffPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial out;
    for (const auto& [name, e] : m) {
      auto it = names.find(name);
      out[it == names.end() ? name : it->second] += e;
    }
    r.add_term(out, c);
  }
  return r;
}

CoeffPoly CoeffPoly::specialize(const std::map<std::string, Rational>& values) const {
  CoeffPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial out;
    Rational k = c;
    for (const auto& [name, e] : m) {
      auto it = values.find(name);
      if (it == values.end()) {
        out[name] = e;
      } else {
        for (unsigned i = 0; i < e; ++i) k *= it->second;
      }
    }
    r.add_term(out, k);
  }
  return r;
}

namespace {

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (const auto& [name, e] : m) d += e;
  return d;
}

std::string monomial_str(const Monomial& m) {
  std::string s;
  for (const auto& [name, e] : m) {
    if (!s.empty()) s += "*";
    s += name;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string CoeffPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& x, const auto& y) { return total_degree(x.first) > total_degree(y.first); });
  std::string out;
  for (const auto& [m, c] : sorted) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (m.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += monomial_str(m);
    }
  }
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

struct Term {
  CoeffPoly coeff = CoeffPoly(Rational(1));
  Exponent exp{0, 0};
};

class LaurentParser {
 public:
  explicit LaurentParser(const std::string& text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
  }

  std::map<Exponent, CoeffPoly> parse() {
    std::map<Exponent, CoeffPoly> out;
    if (s_.empty()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Term t = term();
      if (sign < 0) t.coeff = t.coeff * CoeffPoly(Rational(-1));
      out[t.exp] += t.coeff;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
  }

 private:
  Term term() {
    Term t;
    factor(t);
    while (pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      factor(t);
    }
    return t;
  }

  void factor(Term& t) {
    if (pos_ >= s_.size()) fail("unexpected end");
    char ch = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Integer num = digits();
      Rational q(num);
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        Integer den = digits();
        if (den == 0) fail("zero denominator");
        q = Rational(num, den);
      }
      t.coeff = t.coeff * CoeffPoly(q);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string name = identifier();
      std::int64_t e = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        e = exponent();
      }
      if (name == "x") {
        t.exp.first += e;
      } else if (name == "y") {
        t.exp.second += e;
      } else {
        if (e < 0) fail("negative power of parameter " + name);
        CoeffPoly v = CoeffPoly::variable(name);
        for (std::int64_t i = 0; i < e; ++i) t.coeff = t.coeff * v;
      }
      return;
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  std::int64_t exponent() {
    bool paren = pos_ < s_.size() && s_[pos_] == '(';
    if (paren) ++pos_;
    int sign = 1;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      sign = s_[pos_] == '-' ? -1 : 1;
      ++pos_;
    }
    Integer v = digits();
    if (paren) {
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
    }
    if (v > 1000000) fail("exponent too large");
    return sign * static_cast<std::int64_t>(v);
  }

  Integer digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(s_.substr(start, pos_ - start));
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, "laurent polynomial: " + what + " at offset " + std::to_string(pos_));
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(const std::string& text) { return LaurentPoly(LaurentParser(text).parse()); }

CoeffPoly parse_coeff_poly(const std::string& text) {
  LaurentPoly p = parse_laurent(text);
  for (const auto& [e, c] : p.terms())
    if (e != Exponent{0, 0}) throw Error(ErrorKind::ParseError, "x or y in a coefficient polynomial: " + text);
  return p.constant_term();
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(std::map<Exponent, CoeffPoly> terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

std::vector<LatticePoint> LaurentPoly::support() const {
  std::vector<LatticePoint> out;
  for (const auto& [e, c] : terms_) out.push_back({e.first, e.second});
  return out;
}

CoeffPoly LaurentPoly::constant_term() const {
  auto it = terms_.find({0, 0});
  return it == terms_.end() ? CoeffPoly() : it->second;
}

std::set<std::string> LaurentPoly::parameters() const {
  std::set<std::string> out;
  for (const auto& [e, c] : terms_) out.merge(c.parameters());
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  std::map<Exponent, CoeffPoly> out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out[{e1.first + e2.first, e1.second + e2.second}] += c1 * c2;
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  auto out = terms_;
  for (const auto& [e, c] : o.terms_) out[e] += c;
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::rename(const std::map<std::string, std::string>& names) const {
  std::map<Exponent, CoeffPoly> out;
  for (const auto& [e, c] : terms_) out[e] = c.rename(names);
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::specialize(const std::map<std::string, Rational>& values) const {
  std::map<Exponent, CoeffPoly> out;
  for (const auto& [e, c] : terms_) out[e] = c.specialize(values);
  return LaurentPoly(std::move(out));
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string xy;
    auto var = [&](const char* v, std::int64_t k) {
      if (k == 0) return;
      if (!xy.empty()) xy += "*";
      xy += v;
      if (k != 1) xy += "^" + std::to_string(k);
    };
    var("x", e.first);
    var("y", e.second);
    std::string coeff = c.str();
    bool compound = c.terms().size() > 1;
    std::string term;
    if (xy.empty()) {
      term = compound ? "(" + coeff + ")" : coeff;
    } else if (coeff == "1") {
      term = xy;
    } else if (coeff == "-1") {
      term = "-" + xy;
    } else {
      term = (compound ? "(" + coeff + ")" : coeff) + "*" + xy;
    }
    if (!out.empty()) {
      if (term[0] == '-') {
        out += " - " + term.substr(1);
        continue;
      }
      out += " + ";
    }
    out += term;
  }
  return out;
}

Polygon newton_polygon(const LaurentPoly& f) {
  auto pts = f.support();
  return convex_hull(pts);
}

// ---------------------------------------------------------------- periods

PeriodPrefix PeriodPrefix::rename(const std::map<std::string, std::string>& names) const {
  PeriodPrefix out;
  for (const auto& v : values) out.values.push_back(v.rename(names));
  return out;
}

std::set<std::string> PeriodPrefix::parameters() const {
  std::set<std::string> out;
  for (const auto& v : values) out.merge(v.parameters());
  return out;
}

namespace {

struct HalfPlane {
  std::int64_t u, v, c;  // <e, (u,v)> >= c
};

std::vector<HalfPlane> support_half_planes(const LaurentPoly& f) {
  auto pts = f.support();
  auto hull = hull_vertices(pts);
  std::vector<HalfPlane> out;
  if (hull.size() < 3) return out;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& p = hull[i];
    const auto& q = hull[(i + 1) % hull.size()];
    // Clockwise boundary: the interior is on the right of p -> q.
    std::int64_t u = to_int64(q.y - p.y), v = to_int64(p.x - q.x);
    out.push_back({u, v, to_int64(p.x) * u + to_int64(p.y) * v});
  }
  return out;
}

}  // namespace

PeriodPrefix period_prefix(const LaurentPoly& f, std::size_t n_max) {
  PeriodPrefix out;
  out.values.push_back(CoeffPoly(Rational(1)));
  auto planes = support_half_planes(f);
  auto reachable = [&](const Exponent& e, std::int64_t remaining) {
    for (const auto& h : planes)
      if (-(e.first * h.u + e.second * h.v) < remaining * h.c) return false;
    return true;
  };
  LaurentPoly power(std::map<Exponent, CoeffPoly>{{{0, 0}, CoeffPoly(Rational(1))}});
  for (std::size_t k = 1; k <= n_max; ++k) {
    power = power * f;
    std::map<Exponent, CoeffPoly> kept;
    for (const auto& [e, c] : power.terms())
      if (reachable(e, static_cast<std::int64_t>(n_max - k))) kept.emplace(e, c);
    power = LaurentPoly(std::move(kept));
    out.values.push_back(power.constant_term());
  }
  return out;
}

PeriodPrefix period_prefix_dense(const LaurentPoly& f, std::size_t n_max) {
  PeriodPrefix out;
  out.values.push_back(CoeffPoly(Rational(1)));
  LaurentPoly power(std::map<Exponent, CoeffPoly>{{{0, 0}, CoeffPoly(Rational(1))}});
  for (std::size_t k = 1; k <= n_max; ++k) {
    power = power * f;
    out.values.push_back(power.constant_term());
  }
  return out;
}

PeriodComparison periods_distinct(const PeriodPrefix& f, const PeriodPrefix& g) {
  std::size_t len = std::min(f.values.size(), g.values.size());
  std::vector<std::string> fp, gp;
  for (const auto& s : f.parameters()) fp.push_back(s);
  for (const auto& s : g.parameters()) gp.push_back(s);

  PeriodComparison result;
  result.verdict = PeriodVerdict::Distinct;
  std::size_t witness = 0;
  bool matched = false;
  std::map<std::string, std::string> names;
  std::vector<bool> used(fp.size(), false);

  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (matched) return;
    if (i == gp.size()) {
      std::size_t n = 0;
      for (; n < len; ++n)
        if (!(g.values[n].rename(names) == f.values[n])) break;
      if (n == len) {
        matched = true;
        result.matching = names;
      } else {
        witness = std::max(witness, n);
      }
      return;
    }
    for (std::size_t j = 0; j < fp.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      names[gp[i]] = fp[j];
      assign(i + 1);
      used[j] = false;
    }
    names[gp[i]] = "~" + gp[i];  // fresh: matches nothing in f
    assign(i + 1);
    names.erase(gp[i]);
  };
  assign(0);

  if (matched) {
    result.verdict = PeriodVerdict::Inconclusive;
    for (auto it = result.matching.begin(); it != result.matching.end();)
      it = it->second[0] == '~' ? result.matching.erase(it) : std::next(it);
  } else {
    result.witness = witness;
  }
  return result;
}

PeriodComparison periods_distinct(const LaurentPoly& f, const LaurentPoly& g, std::size_t n_max) {
  return periods_distinct(period_prefix(f, n_max), period_prefix(g, n_max));
}

std::string to_string(PeriodVerdict v) { return v == PeriodVerdict::Distinct ? "DISTINCT" : "INCONCLUSIVE"; }

// ---------------------------------------------------------------- fixtures

PeriodPrefix PeriodFixture::printed_prefix() const {
  PeriodPrefix out;
  for (const auto& s : printed) out.values.push_back(parse_coeff_poly(s));
  return out;
}

PeriodPrefix PeriodFixture::prefix(std::size_t n_max) const {
  if (!laurent) return printed_prefix();
  return period_prefix(parse_laurent(*laurent), n_max).rename(renaming);
}

const std::vector<PeriodFixture>& period_fixtures() {
  static const std::vector<PeriodFixture> fixtures = {
      {"1.7",
       {{-1, 3}, {1, 3}, {1, 0}, {0, -1}, {-1, 0}},
       "x*y^3 + 3*x*y^2 + a*y^3 + 3*x*y + b*y^2 + x^-1*y^3 + x + c*y + 3*x^-1*y^2 + 3*x^-1*y + y^-1 + x^-1",
       {{"a", "c"}, {"c", "a"}},
       {"1", "0", "2*a + 2", "3*b + 36", "6*a^2 + 24*a + 4*c + 186", "20*a*b + 360*a + 60*b + 760"},
       "1.8"},
      {"1.8",
       {{-1, 3}, {1, 3}, {1, 0}, {-1, -1}},
       "x*y^3 + 3*x*y^2 + d*y^3 + 3*x*y + e*y^2 + x^-1*y^3 + x + f*y + 4*x^-1*y^2 + 6*x^-1*y + 4*x^-1 + x^-1*y^-1",
       {{"f", "a"}, {"e", "b"}},
       {"1", "0", "14", "6*a", "546", "420*a + 30*b"},
       "1.7"},
      {"2.6",
       {{-3, 5}, {-2, 5}, {0, 1}, {1, -2}, {0, -1}},
       std::nullopt,
       {},
       {"1", "0", "12", "6*a", "396", "360*a + 30*b"},
       "2.7"},
      {"2.7",
       {{-3, 5}, {-2, 5}, {1, -1}, {0, -1}},
       std::nullopt,
       {},
       {"1", "0", "2*c + 12", "6*c + 3*d + 90", "6*c^2 + 24*d + 144*c + 636",
        "20*c*d + 60*c^2 + 390*d + 1260*c + 6900"},
       "2.6"},
  };
  return fixtures;
}

const PeriodFixture* find_period_fixture(const Polygon& nf) {
  for (const auto& fx : period_fixtures())
    if (normal_form(convex_hull(fx.vertices)) == nf) return &fx;
  return nullptr;
}

}  // namespace fano
