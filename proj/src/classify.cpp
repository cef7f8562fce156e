#include "fano/classify.hpp"

#include "fano/error.hpp"
#include "fano/invariants.hpp"
#include "fano/laurent.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdio>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

namespace fano {

std::vector<EdgeData> special_facets(const Polygon& p) {
  LatticePoint s = vertex_sum(p);
  std::vector<EdgeData> out;
  for (const auto& e : edges(p))
    if (in_cone(s, e.from, e.to)) out.push_back(e);
  return out;
}

// ---------------------------------------------------------------- baskets

BasketSpec BasketSpec::parse(const std::string& text) {
  BasketSpec spec;
  spec.text = text;
  const std::string prefix = "family:";
  if (text.rfind(prefix, 0) == 0) {
    spec.family = true;
    std::string rest = text.substr(prefix.size());
    std::size_t start = 0;
    while (start <= rest.size()) {
      std::size_t plus = rest.find('+', start);
      std::string item = rest.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
      auto one = parse_basket(item);
      if (one.size() != 1) throw Error(ErrorKind::ParseError, "family member '" + item + "' must be a single type");
      if (std::find(spec.types.begin(), spec.types.end(), one[0]) != spec.types.end())
        throw Error(ErrorKind::ParseError, "family lists " + one[0].str() + " twice");
      spec.types.push_back(one[0]);
      if (plus == std::string::npos) break;
      start = plus + 1;
    }
  } else {
    spec.fixed = parse_basket(text);
    for (const auto& s : spec.fixed)
      if (std::find(spec.types.begin(), spec.types.end(), s) == spec.types.end()) spec.types.push_back(s);
  }
  if (spec.types.empty()) throw Error(ErrorKind::ConfigError, "basket must contain at least one R-singularity");
  return spec;
}

std::vector<std::vector<QuotientSingularity>> BasketSpec::baskets(unsigned mult_max) const {
  if (!family) return {fixed};
  std::vector<std::vector<QuotientSingularity>> out;
  std::vector<unsigned> m(types.size(), 0);
  // Lexicographic over multiplicity vectors.
  auto emit = [&] {
    std::vector<QuotientSingularity> b;
    for (std::size_t i = 0; i < types.size(); ++i)
      for (unsigned k = 0; k < m[i]; ++k) b.push_back(types[i]);
    std::sort(b.begin(), b.end());
    out.push_back(std::move(b));
  };
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned used) {
    if (i + 1 == types.size()) {
      for (unsigned k = 1; used + k <= mult_max; ++k) {
        m[i] = k;
        emit();
      }
      m[i] = 0;
      return;
    }
    for (unsigned k = 0; used + k <= mult_max; ++k) {
      m[i] = k;
      rec(i + 1, used + k);
    }
    m[i] = 0;
  };
  rec(0, 0);
  return out;
}

std::vector<unsigned> BasketSpec::multiplicities(const std::vector<QuotientSingularity>& basket) const {
  std::vector<unsigned> m;
  for (const auto& t : types) m.push_back(static_cast<unsigned>(std::count(basket.begin(), basket.end(), t)));
  return m;
}

Integer default_n_max(const std::vector<QuotientSingularity>& basket) {
  Rational bound = 12;
  for (const auto& s : basket) bound -= degree_contribution(s);
  return ceil(bound) - 1;
}

std::string SpecialFacetInput::str() const {
  return "l=" + std::to_string(l) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
}

// ---------------------------------------------------------------- region

namespace {

constexpr std::int64_t kCoordinateLimit = std::int64_t{1} << 20;

std::int64_t fdiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
std::int64_t cdiv(std::int64_t a, std::int64_t b) { return -fdiv(-a, b); }

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

// s*a + t*b = gcd(a,b) >= 0
void egcd64(std::int64_t a, std::int64_t b, std::int64_t& g, std::int64_t& s, std::int64_t& t) {
  std::int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = fdiv(r0, r1);
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  g = r0;
  s = s0;
  t = t0;
}

std::int64_t mod64(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t inv64(std::int64_t a, std::int64_t m) {
  std::int64_t g, s, t;
  egcd64(mod64(a, m), m, g, s, t);
  return mod64(s, m);
}

}  // namespace

SearchRegion::SearchRegion(const SpecialFacetInput& in, std::int64_t m_B, std::int64_t expand_by)
    : l(in.l), a(in.a), b(in.b), m(m_B), expand(expand_by) {
  y_min = -l * (l + 1) - expand;
  y_max = l - 1 + expand;
  std::int64_t worst = std::max({std::abs(a), std::abs(b), m, -y_min}) * (l + 2 + std::abs(y_min)) + expand;
  if (worst > kCoordinateLimit)
    throw Error(ErrorKind::BoundsExceeded, "search region for " + in.str() + " exceeds the int64 kernel range");
}

std::pair<std::int64_t, std::int64_t> SearchRegion::row(std::int64_t y) const {
  // L1: x >= (a y - m (l - y)) / l,  L2: x <= (b y + m (l - y)) / l
  std::int64_t lo = cdiv(a * y - m * (l - y), l) - expand;
  std::int64_t hi = fdiv(b * y + m * (l - y), l) + expand;
  return {lo, hi};
}

bool SearchRegion::contains(std::int64_t x, std::int64_t y) const {
  if (y < y_min || y > y_max) return false;
  auto [lo, hi] = row(y);
  return lo <= x && x <= hi;
}

bool SearchRegion::has_point_below(std::int64_t y) const {
  for (std::int64_t t = y_min; t <= std::min(y, y_max); ++t) {
    auto [lo, hi] = row(t);
    if (lo <= hi) return true;
  }
  return false;
}

std::vector<LatticePoint> SearchRegion::primitive_points() const {
  std::vector<LatticePoint> out;
  for (std::int64_t y = y_min; y <= y_max; ++y) {
    auto [lo, hi] = row(y);
    for (std::int64_t x = lo; x <= hi; ++x)
      if (gcd64(x, y) == 1) out.push_back({x, y});
  }
  return out;
}

std::int64_t effective_height_cap(const std::vector<QuotientSingularity>& basket, const SearchBounds& bounds) {
  std::int64_t m_B = to_int64(basket_max_index(basket));
  return std::max(m_B, bounds.t_height_max ? *bounds.t_height_max : 2 * m_B);
}

std::vector<SpecialFacetInput> enumerate_facet_inputs(const std::vector<QuotientSingularity>& basket,
                                                      std::int64_t expand, std::int64_t height_cap) {
  const std::int64_t m_B = to_int64(basket_max_index(basket));
  const std::int64_t m = std::max(m_B, height_cap);
  std::set<QuotientSingularity> types(basket.begin(), basket.end());
  std::vector<SpecialFacetInput> out;
  for (std::int64_t l = 1; l <= m; ++l) {
    for (std::int64_t a = -l + 1; a <= 0; ++a) {
      if (gcd64(a, l) != 1) continue;
      for (std::int64_t b = a + 1;; ++b) {
        SpecialFacetInput in{l, a, b};
        if (b - a >= l && !SearchRegion(in, m, expand).has_point_below(-l)) break;
        if (gcd64(b, l) != 1) continue;
        auto content = edge_singularity_content(make_edge({a, l}, {b, l}));
        if (content.residue && !types.count(*content.residue)) continue;
        if (l > m_B && content.residue) continue;
        out.push_back(in);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- growth

namespace {

struct P64 {
  std::int64_t x, y;
};

std::int64_t cross64(P64 p, P64 q) { return p.x * q.y - p.y * q.x; }

int half(P64 d) { return (d.y < 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; }

// Clockwise angle from (1,0): d1 strictly before d2.
bool cw_before(P64 d1, P64 d2) {
  int h1 = half(d1), h2 = half(d2);
  if (h1 != h2) return h1 < h2;
  return cross64(d1, d2) < 0;
}

struct Residue {
  std::int64_t R, a;
  bool operator==(const Residue&) const = default;
};

Residue canonical(std::int64_t R, std::int64_t a) {
  a = mod64(a, R);
  return {R, std::min(a, inv64(a, R))};
}

class Grower {
 public:
  Grower(const SpecialFacetInput& in, const std::vector<QuotientSingularity>& basket, const Integer& n_max,
         std::int64_t expand, std::int64_t height_cap)
      : in_(in),
        m_B_(to_int64(basket_max_index(basket))),
        m_(std::max(m_B_, height_cap)),
        region_(in, m_, expand),
        n_max_(to_int64(n_max)) {
    for (const auto& s : basket) {
      Residue r{to_int64(s.order()), to_int64(s.weight())};
      auto it = std::find(types_.begin(), types_.end(), r);
      if (it == types_.end()) {
        types_.push_back(r);
        need_.push_back(1);
      } else {
        ++need_[it - types_.begin()];
      }
    }
    have_.assign(types_.size(), 0);
    S_ = {in.a, in.l};
    top_ = std::max(in.l, region_.y_max);
    x_lo_ = std::numeric_limits<std::int64_t>::max();
    x_hi_ = std::numeric_limits<std::int64_t>::min();
    for (std::int64_t y = region_.y_min; y <= top_; ++y) {
      auto [lo, hi] = region_.row(y);
      if (lo > hi) continue;
      x_lo_ = std::min(x_lo_, lo);
      x_hi_ = std::max(x_hi_, hi);
    }
  }

  std::vector<std::vector<P64>> run(GrowStats& stats) {
    stats_ = &stats;
    P64 B{in_.b, in_.l};
    EdgeInfo f;
    if (!edge_info(S_, B, f)) return {};
    if (!take(f)) return {};
    chain_ = {S_, B};
    extend(B, {1, 0});
    return std::move(done_);
  }

 private:
  struct EdgeInfo {
    std::int64_t height = 0, length = 0, n = 0;
    int residue = -1;  // index into types_, -1 for none
  };

  // False when the edge cannot occur (height, residue type).
  bool edge_info(P64 p, P64 q, EdgeInfo& e) const {
    P64 d{q.x - p.x, q.y - p.y};
    std::int64_t g = gcd64(d.x, d.y);
    std::int64_t cr = cross64(p, q);
    if (cr >= 0) return false;
    e.length = g;
    e.height = -cr / g;
    if (e.height > m_) return false;
    e.n = g / e.height;
    std::int64_t k0 = g % e.height;
    e.residue = -1;
    if (k0 == 0) return true;
    if (e.height > m_B_) return false;
    // Full cone 1/R(1,a) with p -> (0,1), q -> (R, -a).
    std::int64_t gg, s, t;
    egcd64(p.x, p.y, gg, s, t);
    std::int64_t R = g * e.height;
    Residue full = canonical(R, -(s * q.x + t * q.y));
    std::int64_t k = gcd64(full.a + 1, R);
    std::int64_t c = (full.a + 1) / k;
    Residue res = canonical(k0 * e.height, k0 * c - 1);
    for (std::size_t i = 0; i < types_.size(); ++i)
      if (types_[i] == res) {
        e.residue = static_cast<int>(i);
        return true;
      }
    return false;
  }

  bool take(const EdgeInfo& e) {
    if (n_ + e.n > n_max_) return false;
    if (e.residue >= 0 && have_[e.residue] >= need_[e.residue]) return false;
    n_ += e.n;
    if (e.residue >= 0) ++have_[e.residue];
    return true;
  }
  void give_back(const EdgeInfo& e) {
    n_ -= e.n;
    if (e.residue >= 0) --have_[e.residue];
  }

  void extend(P64 cur, P64 prev_dir) {
    ++stats_->nodes;
    if (chain_.size() >= 3) try_close(cur, prev_dir);

    std::int64_t g0, s, t;
    egcd64(cur.x, cur.y, g0, s, t);
    const std::int64_t W = x_hi_ - x_lo_;
    const std::int64_t H = top_ - region_.y_min;
    for (std::int64_t h = 1; h <= m_; ++h) {
      P64 dh{h * t, -h * s};  // cross(cur, dh) = -h
      // d = dh + j*cur with |d.x| <= W, |d.y| <= H.
      std::int64_t jlo = std::numeric_limits<std::int64_t>::min() / 4, jhi = std::numeric_limits<std::int64_t>::max() / 4;
      auto clamp = [&](std::int64_t base, std::int64_t step, std::int64_t bound) {
        if (step == 0) {
          if (std::abs(base) > bound) jlo = 1, jhi = 0;
          return;
        }
        std::int64_t lo = -bound - base, hi = bound - base;
        if (step > 0) {
          jlo = std::max(jlo, cdiv(lo, step));
          jhi = std::min(jhi, fdiv(hi, step));
        } else {
          jlo = std::max(jlo, cdiv(hi, step));
          jhi = std::min(jhi, fdiv(lo, step));
        }
      };
      clamp(dh.x, cur.x, W);
      clamp(dh.y, cur.y, H);
      for (std::int64_t j = jlo; j <= jhi; ++j) {
        P64 d{dh.x + j * cur.x, dh.y + j * cur.y};
        if (gcd64(d.x, d.y) != 1) continue;
        if (cross64(prev_dir, d) >= 0 || !cw_before(prev_dir, d)) continue;
        // The start vertex must stay strictly on the inner side of the new edge.
        if (cross64(d, {S_.x - cur.x, S_.y - cur.y}) >= 0) continue;
        const std::int64_t n_room = n_max_ - n_;
        for (std::int64_t L = 1;; ++L) {
          if (L / h > n_room) break;
          P64 q{cur.x + L * d.x, cur.y + L * d.y};
          // The closed region is convex and contains cur: once outside, stay outside.
          if (q.y < region_.y_min || q.y > top_) break;
          auto [lo, hi] = region_.row(q.y);
          if (q.x < lo || q.x > hi) break;
          if (q.y >= in_.l || q.y > region_.y_max) continue;
          if (gcd64(q.x, q.y) != 1) continue;
          EdgeInfo e;
          if (!edge_info(cur, q, e)) continue;
          if (!take(e)) continue;
          chain_.push_back(q);
          extend(q, d);
          chain_.pop_back();
          give_back(e);
        }
      }
    }
  }

  void try_close(P64 cur, P64 prev_dir) {
    P64 d{S_.x - cur.x, S_.y - cur.y};
    if (cross64(prev_dir, d) >= 0 || !cw_before(prev_dir, d)) return;
    EdgeInfo e;
    if (!edge_info(cur, S_, e)) return;
    if (!take(e)) return;
    if (have_ == need_) {
      ++stats_->completed;
      done_.push_back(chain_);
    }
    give_back(e);
  }

  SpecialFacetInput in_;
  std::int64_t m_B_, m_;
  SearchRegion region_;
  std::int64_t n_max_;
  std::int64_t top_ = 0, x_lo_ = 0, x_hi_ = 0;
  std::vector<Residue> types_;
  std::vector<int> need_, have_;
  std::int64_t n_ = 0;
  P64 S_{};
  std::vector<P64> chain_;
  std::vector<std::vector<P64>> done_;
  GrowStats* stats_ = nullptr;
};

// Edge condition form of minimality, in int64: every edge with length >= height
// needs a vertex at depth >= height on the opposite side.
bool passes_edge_condition(const std::vector<P64>& v) {
  const std::size_t k = v.size();
  for (std::size_t i = 0; i < k; ++i) {
    P64 p = v[i], q = v[(i + 1) % k];
    P64 d{q.x - p.x, q.y - p.y};
    std::int64_t g = gcd64(d.x, d.y);
    std::int64_t height = -cross64(p, q) / g;
    if (g < height) continue;
    // Inner normal w = (d.y, -d.x)/g: <p, w> = -height.
    std::int64_t hmax = 0;
    for (const auto& u : v) hmax = std::max(hmax, (u.x * d.y - u.y * d.x) / g);
    if (height > hmax) return false;
  }
  return true;
}

}  // namespace

std::vector<Polygon> grow(const SpecialFacetInput& input, const std::vector<QuotientSingularity>& basket,
                          const Integer& n_max, std::int64_t expand, GrowStats* stats, std::int64_t height_cap) {
  GrowStats local;
  GrowStats& st = stats ? *stats : local;
  Grower grower(input, basket, n_max, expand, height_cap);
  auto chains = grower.run(st);

  const std::int64_t m = to_int64(basket_max_index(basket));
  const bool strict = height_cap <= m;
  std::vector<Polygon> out;
  for (const auto& c : chains) {
    std::int64_t mp = 0;
    P64 sum{0, 0};
    for (std::size_t i = 0; i < c.size(); ++i) {
      P64 p = c[i], q = c[(i + 1) % c.size()];
      mp = std::max(mp, -cross64(p, q) / gcd64(q.x - p.x, q.y - p.y));
      sum.x += p.x;
      sum.y += p.y;
    }
    if (strict && mp != m) continue;
    // F special: the vertex sum lies in the cone over F.
    P64 A = c[0], B = c[1];
    if (cross64(A, sum) > 0 || cross64(sum, B) > 0) continue;
    if (!(sum.x == 0 && sum.y == 0) && sum.y <= 0) continue;
    if (!passes_edge_condition(c)) continue;
    std::vector<LatticePoint> pts;
    for (const auto& p : c) pts.push_back({p.x, p.y});
    Polygon poly = convex_hull(pts);
    if (!is_minimal(poly)) continue;
    out.push_back(std::move(poly));
  }
  return out;
}

// ---------------------------------------------------------------- equivalence

std::string to_string(SeparationKind k) {
  switch (k) {
    case SeparationKind::SingularityContent: return "singularity_content";
    case SeparationKind::PeriodFixture: return "period_fixture";
    case SeparationKind::Unresolved: return "UNRESOLVED";
  }
  return "?";
}

namespace {

struct Reach {
  // target index -> path of normal forms
  std::map<std::size_t, std::vector<Polygon>> paths;
};

Reach bounded_bfs(std::size_t start, const std::vector<Polygon>& nfs, const std::map<Polygon, std::size_t>& index,
                  const Integer& cap, unsigned max_depth) {
  Reach out;
  std::map<Polygon, std::pair<Polygon, unsigned>> parent;  // node -> (parent, depth)
  std::deque<Polygon> queue;
  parent.emplace(nfs[start], std::make_pair(nfs[start], 0u));
  queue.push_back(nfs[start]);
  while (!queue.empty()) {
    Polygon cur = queue.front();
    queue.pop_front();
    unsigned depth = parent.at(cur).second;
    auto hit = index.find(cur);
    if (hit != index.end() && hit->second != start) {
      std::vector<Polygon> path{cur};
      Polygon p = cur;
      while (!(p == nfs[start])) {
        p = parent.at(p).first;
        path.push_back(p);
      }
      std::reverse(path.begin(), path.end());
      out.paths.emplace(hit->second, std::move(path));
    }
    if (depth >= max_depth) continue;
    for (auto& q : mutation_neighbours(cur)) {
      if (parent.count(q)) continue;
      if (boundary_count(q) > cap) continue;
      parent.emplace(q, std::make_pair(cur, depth + 1));
      queue.push_back(std::move(q));
    }
  }
  return out;
}

std::size_t find_root(std::vector<std::size_t>& up, std::size_t i) {
  while (up[i] != i) i = up[i] = up[up[i]];
  return i;
}

}  // namespace

EquivalencePartition equivalence_classes(const std::vector<Polygon>& polys, const EquivalenceBudget& budget,
                                         bool parallel) {
  const std::size_t k = polys.size();
  std::vector<Polygon> nfs;
  std::vector<SingularityContent> sc;
  for (const auto& p : polys) {
    nfs.push_back(normal_form(p));
    sc.push_back(singularity_content(p));
  }
  // Boundary cap per singularity-content group.
  std::vector<Integer> cap(k);
  for (std::size_t i = 0; i < k; ++i) {
    Integer lo = boundary_count(nfs[i]);
    for (std::size_t j = 0; j < k; ++j)
      if (sc[j].same_as(sc[i])) lo = std::min(lo, boundary_count(nfs[j]));
    cap[i] = lo * budget.boundary_factor;
  }

  std::vector<Reach> reach(k);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::size_t i = 0; i < k; ++i) {
    std::map<Polygon, std::size_t> index;
    for (std::size_t j = 0; j < k; ++j)
      if (sc[j].same_as(sc[i])) index.emplace(nfs[j], j);
    reach[i] = bounded_bfs(i, nfs, index, cap[i], budget.max_depth);
  }

  std::vector<std::size_t> up(k);
  std::iota(up.begin(), up.end(), 0);
  std::vector<MergeEvidence> merges;
  for (std::size_t i = 0; i < k; ++i)
    for (const auto& [j, path] : reach[i].paths) {
      std::size_t ri = find_root(up, i), rj = find_root(up, j);
      if (ri == rj) continue;
      up[std::max(ri, rj)] = std::min(ri, rj);
      merges.push_back({i, j, path});
    }

  EquivalencePartition out;
  std::map<std::size_t, std::size_t> class_of_root;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t r = find_root(up, i);
    auto [it, fresh] = class_of_root.emplace(r, out.classes.size());
    if (fresh) out.classes.push_back({{}, i, {}});
    out.classes[it->second].members.push_back(i);
  }
  for (auto& m : merges) out.classes[class_of_root.at(find_root(up, m.from))].merges.push_back(std::move(m));

  for (auto& c : out.classes) {
    // Fewest boundary points, then smallest normal form.
    c.representative = *std::min_element(c.members.begin(), c.members.end(), [&](std::size_t x, std::size_t y) {
      Integer bx = boundary_count(nfs[x]), by = boundary_count(nfs[y]);
      return bx < by || (bx == by && nfs[x] < nfs[y]);
    });
  }

  for (std::size_t a = 0; a < out.classes.size(); ++a)
    for (std::size_t b = a + 1; b < out.classes.size(); ++b) {
      const auto& A = out.classes[a];
      const auto& B = out.classes[b];
      SeparationEvidence ev{a, b, SeparationKind::Unresolved, "no mutation path within budget; no distinguishing invariant"};
      const auto& sa = sc[A.representative];
      const auto& sb = sc[B.representative];
      if (!sa.same_as(sb)) {
        ev.kind = SeparationKind::SingularityContent;
        ev.detail = "(" + to_string(sa.n) + ", {" + basket_to_string(sa.sorted_basket()) + "}) vs (" + to_string(sb.n) +
                    ", {" + basket_to_string(sb.sorted_basket()) + "})";
      } else {
        for (std::size_t x : A.members) {
          const PeriodFixture* fa = find_period_fixture(nfs[x]);
          if (!fa) continue;
          for (std::size_t y : B.members) {
            const PeriodFixture* fb = find_period_fixture(nfs[y]);
            if (!fb || fb->id != fa->partner) continue;
            auto pa = fa->prefix(), pb = fb->prefix();
            auto cmp = periods_distinct(pa, pb);
            if (cmp.verdict == PeriodVerdict::Distinct) {
              ev.kind = SeparationKind::PeriodFixture;
              std::size_t w = cmp.witness;
              ev.detail = "fixtures " + fa->id + "/" + fb->id + ": pi_" + std::to_string(w) + " = " +
                          pa.values[w].str() + " vs " + pb.values[w].str();
            }
          }
        }
      }
      out.separations.push_back(std::move(ev));
    }
  return out;
}

// ---------------------------------------------------------------- runs

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::string config_hash(const BasketSpec& spec, const SearchBounds& bounds, const EquivalenceBudget& budget) {
  std::string canon = "basket=" + spec.text + ";n_max=" + (bounds.n_max ? to_string(*bounds.n_max) : "default") +
                      ";mult_max=" + std::to_string(bounds.mult_max) +
                      ";region_expand=" + std::to_string(bounds.region_expand) +
                      ";t_height_max=" + (bounds.t_height_max ? std::to_string(*bounds.t_height_max) : "default") +
                      ";boundary_factor=" + std::to_string(budget.boundary_factor) +
                      ";max_depth=" + std::to_string(budget.max_depth);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(canon)));
  return buf;
}

ClassificationRun classify(const BasketSpec& spec, const SearchBounds& bounds, const EquivalenceBudget& budget,
                           const ClassifyOptions& options) {
  if (bounds.mult_max < 1) throw Error(ErrorKind::ConfigError, "mult-max must be at least 1");
  if (bounds.n_max && *bounds.n_max < 0) throw Error(ErrorKind::ConfigError, "n-max must be non-negative");
  if (bounds.region_expand < 0) throw Error(ErrorKind::ConfigError, "region expansion must be non-negative");
  if (budget.boundary_factor < 1) throw Error(ErrorKind::ConfigError, "boundary factor must be at least 1");

  ClassificationRun run;
  run.basket_spec = spec.text;
  run.bounds = bounds;
  run.budget = budget;
  run.config_hash = config_hash(spec, bounds, budget);
  run.disclaimer =
      "Edges carrying a residue have height at most m_B; residue-free edges have height at most the "
      "configured cap (default 2 m_B). Polygons with taller edges are not searched.";

  struct Task {
    std::vector<QuotientSingularity> basket;
    Integer n_max;
    SpecialFacetInput input;
    std::int64_t cap;
  };
  std::vector<Task> tasks;
  auto baskets = spec.baskets(bounds.mult_max);
  if (baskets.empty()) throw Error(ErrorKind::ConfigError, "no basket within mult-max");
  for (const auto& b : baskets) {
    Integer n_max = bounds.n_max ? *bounds.n_max : default_n_max(b);
    std::int64_t cap = effective_height_cap(b, bounds);
    for (const auto& in : enumerate_facet_inputs(b, bounds.region_expand, cap)) tasks.push_back({b, n_max, in, cap});
  }

  std::map<std::pair<std::string, SpecialFacetInput>, const InputRecord*> previous;
  if (options.resume) {
    if (options.resume->config_hash != run.config_hash)
      throw Error(ErrorKind::ConfigError, "resume file was produced with a different configuration");
    for (const auto& r : options.resume->inputs) previous[{r.basket, r.input}] = &r;
  }

  std::vector<std::optional<InputRecord>> records(tasks.size());
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    auto key = std::make_pair(basket_to_string(tasks[i].basket), tasks[i].input);
    auto it = previous.find(key);
    if (it != previous.end()) {
      records[i] = *it->second;
    } else if (!options.max_inputs || todo.size() < *options.max_inputs) {
      todo.push_back(i);
    }
  }

#pragma omp parallel for schedule(dynamic) if (options.parallel)
  for (std::size_t k = 0; k < todo.size(); ++k) {
    const Task& t = tasks[todo[k]];
    GrowStats st;
    InputRecord rec{basket_to_string(t.basket), t.input, grow(t.input, t.basket, t.n_max, bounds.region_expand, &st, t.cap),
                    st.nodes};
    records[todo[k]] = std::move(rec);
  }

  run.complete = true;
  for (auto& r : records) {
    if (r) {
      run.inputs.push_back(std::move(*r));
    } else {
      run.complete = false;
    }
  }
  if (run.complete) finalize_run(run, spec, options.parallel);
  return run;
}

void finalize_run(ClassificationRun& run, const BasketSpec& spec, bool parallel) {
  // normal form -> construction with the tallest facet, first in input order
  std::map<Polygon, std::pair<std::int64_t, Polygon>> built;
  for (const auto& r : run.inputs)
    for (const auto& p : r.outputs) {
      auto [it, fresh] = built.emplace(normal_form(p), std::make_pair(r.input.l, p));
      if (!fresh && r.input.l > it->second.first) it->second = {r.input.l, p};
    }
  run.outputs.clear();
  for (const auto& [nf, p] : built) run.outputs.push_back(nf);

  auto partition = equivalence_classes(run.outputs, run.budget, parallel);
  std::vector<ClassRow> rows;
  for (const auto& c : partition.classes) {
    const Polygon& nf = run.outputs[c.representative];
    ClassRow row{0, built.at(nf).second, 0, {}, 0, {}};
    auto sc = singularity_content(nf);
    row.n = sc.n;
    row.multiplicities = spec.multiplicities(sc.basket);
    row.degree = anticanonical_degree(nf);
    for (std::size_t m : c.members) row.members.push_back(run.outputs[m]);
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const auto& a = rows[x];
    const auto& b = rows[y];
    if (a.multiplicities != b.multiplicities) return a.multiplicities < b.multiplicities;
    if (a.n != b.n) return a.n < b.n;
    return normal_form(a.representative) < normal_form(b.representative);
  });
  std::vector<std::size_t> position(rows.size());
  run.rows.clear();
  for (std::size_t i = 0; i < order.size(); ++i) {
    position[order[i]] = i;
    run.rows.push_back(std::move(rows[order[i]]));
    run.rows.back().index = i + 1;
  }
  run.separations.clear();
  for (auto ev : partition.separations) {
    ev.class_a = position[ev.class_a];
    ev.class_b = position[ev.class_b];
    if (ev.class_a > ev.class_b) std::swap(ev.class_a, ev.class_b);
    run.separations.push_back(std::move(ev));
  }
  std::sort(run.separations.begin(), run.separations.end(), [](const auto& x, const auto& y) {
    return std::tie(x.class_a, x.class_b) < std::tie(y.class_a, y.class_b);
  });
}

}  // namespace fano
