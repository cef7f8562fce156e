#include "fano/oracles.hpp"

#include "fano/error.hpp"

#include <algorithm>
#include <map>

namespace fano::oracle {

LatticeCounts brute_force_counts(const Polygon& p) {
  const auto& v = p.vertices();
  Integer xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
  for (const auto& q : v) {
    xmin = std::min(xmin, q.x);
    xmax = std::max(xmax, q.x);
    ymin = std::min(ymin, q.y);
    ymax = std::max(ymax, q.y);
  }
  LatticeCounts c{0, 0};
  for (Integer x = xmin; x <= xmax; ++x)
    for (Integer y = ymin; y <= ymax; ++y) {
      bool inside = true, on_edge = false;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        // Clockwise: interior on the right, cross <= 0.
        Integer cr = (b.x - a.x) * (y - a.y) - (b.y - a.y) * (x - a.x);
        if (cr > 0) inside = false;
        if (cr == 0) on_edge = true;
      }
      if (!inside) continue;
      if (on_edge) {
        ++c.boundary;
      } else {
        ++c.interior;
      }
    }
  return c;
}

namespace {

std::vector<std::pair<Rational, Rational>> dual_vertices(const Polygon& p) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& e : edges(p))
    out.emplace_back(Rational(e.inner_normal.u, e.height), Rational(e.inner_normal.v, e.height));
  return out;
}

}  // namespace

Rational dual_area2(const Polygon& p) {
  auto d = dual_vertices(p);
  Rational s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& a = d[i];
    const auto& b = d[(i + 1) % d.size()];
    s += a.first * b.second - a.second * b.first;
  }
  return s < 0 ? Rational(-s) : s;
}

Integer dual_dilate_count(const Polygon& p, std::int64_t k) {
  auto d = dual_vertices(p);
  Rational xmin = d[0].first, xmax = d[0].first, ymin = d[0].second, ymax = d[0].second;
  for (const auto& [x, y] : d) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  Integer count = 0;
  for (Integer x = floor(xmin * k); x <= ceil(xmax * k); ++x)
    for (Integer y = floor(ymin * k); y <= ceil(ymax * k); ++y) {
      bool ok = true;
      for (const auto& v : p.vertices())
        if (x * v.x + y * v.y < -k) {
          ok = false;
          break;
        }
      if (ok) ++count;
    }
  return count;
}

Polygon brute_force_mutation(const Polygon& p, const EdgeData& e) {
  const DualVector& w = e.inner_normal;
  const LatticePoint f = e.direction();
  std::map<Integer, std::vector<LatticePoint>> levels;
  for (const auto& q : lattice_points(p)) levels[pairing(q, w)].push_back(q);
  std::vector<LatticePoint> pts;
  std::vector<LatticePoint> all = lattice_points(p);
  auto in_p = [&](const LatticePoint& q) { return std::find(all.begin(), all.end(), q) != all.end(); };
  for (const auto& [h, slice] : levels) {
    for (const auto& s : slice) {
      if (h >= 0) {
        pts.push_back(s);
        pts.push_back(s + h * f);
      } else if (in_p(s + (-h) * f)) {
        pts.push_back(s);  // s + |h| F inside the slice
      }
    }
  }
  return convex_hull(pts);
}

EdgeData edge_with_normal(const Polygon& q, const DualVector& w) {
  for (const auto& e : edges(q))
    if (e.inner_normal == w) return e;
  throw Error(ErrorKind::NotAdmissible, "no edge with the requested normal");
}

UnimodularMap random_unimodular(std::mt19937_64& rng, int steps) {
  std::uniform_int_distribution<int> pick(0, 5), shift(-3, 3);
  UnimodularMap m = UnimodularMap::identity();
  for (int i = 0; i < steps; ++i) {
    int k = shift(rng);
    switch (pick(rng)) {
      case 0: m = UnimodularMap(1, k, 0, 1) * m; break;
      case 1: m = UnimodularMap(1, 0, k, 1) * m; break;
      case 2: m = UnimodularMap(0, 1, 1, 0) * m; break;
      case 3: m = UnimodularMap(-1, 0, 0, 1) * m; break;
      case 4: m = UnimodularMap(0, -1, 1, 0) * m; break;
      default: m = UnimodularMap(1, 0, 0, -1) * m; break;
    }
  }
  return m;
}

Polygon random_fano_polygon(std::mt19937_64& rng, int r, const Integer& max_area2) {
  std::uniform_int_distribution<int> coord(-r, r), count(3, 6);
  for (;;) {
    std::vector<LatticePoint> pts;
    int k = count(rng);
    while (static_cast<int>(pts.size()) < k) {
      LatticePoint q{coord(rng), coord(rng)};
      if (q.is_primitive()) pts.push_back(q);
    }
    try {
      Polygon p = convex_hull(pts);
      if (area2(p) <= max_area2) return p;
    } catch (const Error&) {
    }
  }
}

}  // namespace fano::oracle
