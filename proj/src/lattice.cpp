#include "fano/lattice.hpp"

#include "fano/error.hpp"

#include <algorithm>

namespace fano {

bool LatticePoint::is_primitive() const { return gcd(x, y) == 1; }

std::string LatticePoint::str() const { return "(" + x.str() + "," + y.str() + ")"; }

UnimodularMap::UnimodularMap(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  Integer det = determinant();
  if (det != 1 && det != -1) throw Error(ErrorKind::OutOfRange, "matrix is not unimodular (det " + det.str() + ")");
}

UnimodularMap UnimodularMap::operator*(const UnimodularMap& o) const {
  return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_};
}

UnimodularMap UnimodularMap::inverse() const {
  Integer det = determinant();
  return {d_ * det, -b_ * det, -c_ * det, a_ * det};
}

LatticePoint EdgeData::direction() const {
  LatticePoint d = to - from;
  return {d.x / length, d.y / length};
}

EdgeData make_edge(const LatticePoint& from, const LatticePoint& to) {
  LatticePoint d = to - from;
  Integer g = gcd(d.x, d.y);
  if (g == 0) throw Error(ErrorKind::NotFullDimensional, "degenerate edge at " + from.str());
  // Clockwise traversal keeps the interior on the right; the right normal of d is (dy, -dx).
  DualVector n{d.y / g, -d.x / g};
  Integer level = pairing(from, n);
  if (level >= 0) throw Error(ErrorKind::OriginNotInterior, "origin not strictly inside edge " + from.str() + "-" + to.str());
  return {from, to, n, -level, g};
}

std::string Polygon::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += ",";
    s += vertices_[i].str();
  }
  return s + "]";
}

std::vector<LatticePoint> hull_vertices(std::span<const LatticePoint> points) {
  std::vector<LatticePoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  // Andrew's monotone chain, counter-clockwise, strict turns only.
  std::vector<LatticePoint> hull;
  hull.reserve(2 * pts.size());
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t base = hull.size();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto& p = pass == 0 ? pts[i] : pts[pts.size() - 1 - i];
      while (hull.size() >= base + 2 && cross(hull[hull.size() - 1] - hull[hull.size() - 2], p - hull[hull.size() - 1]) <= 0)
        hull.pop_back();
      hull.push_back(p);
    }
    hull.pop_back();
  }
  if (hull.size() == 2 && hull[0] == hull[1]) hull.pop_back();
  // Counter-clockwise from the lexicographic minimum -> clockwise from it.
  std::reverse(hull.begin() + 1, hull.end());
  return hull;
}

Polygon convex_hull(std::span<const LatticePoint> points) {
  auto hull = hull_vertices(points);
  if (hull.size() < 3) throw Error(ErrorKind::NotFullDimensional, "hull is not two-dimensional");
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& p = hull[i];
    const auto& q = hull[(i + 1) % hull.size()];
    if (cross(q - p, LatticePoint{-p.x, -p.y}) >= 0)
      throw Error(ErrorKind::OriginNotInterior, "origin is not in the strict interior");
  }
  for (const auto& v : hull)
    if (!v.is_primitive()) throw Error(ErrorKind::NonPrimitiveVertex, "vertex " + v.str() + " is not primitive");
  return Polygon(std::move(hull));
}

Polygon transform(const Polygon& p, const UnimodularMap& u) {
  std::vector<LatticePoint> img;
  img.reserve(p.size());
  for (const auto& v : p.vertices()) img.push_back(u(v));
  return convex_hull(img);
}

std::vector<EdgeData> edges(const Polygon& p) {
  const auto& v = p.vertices();
  std::vector<EdgeData> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(make_edge(v[i], v[(i + 1) % v.size()]));
  return out;
}

Integer boundary_count(const Polygon& p) {
  Integer b = 0;
  const auto& v = p.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto d = v[(i + 1) % v.size()] - v[i];
    b += gcd(d.x, d.y);
  }
  return b;
}

Integer area2(const Polygon& p) {
  Integer s = 0;
  const auto& v = p.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) s += cross(v[i], v[(i + 1) % v.size()]);
  return abs(s);
}

Integer interior_count(const Polygon& p) { return (area2(p) - boundary_count(p) + 2) / 2; }

std::vector<LatticePoint> lattice_points(const Polygon& p) {
  const auto& v = p.vertices();
  Integer xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
  for (const auto& q : v) {
    xmin = std::min(xmin, q.x);
    xmax = std::max(xmax, q.x);
    ymin = std::min(ymin, q.y);
    ymax = std::max(ymax, q.y);
  }
  auto es = edges(p);
  std::vector<LatticePoint> out;
  for (Integer x = xmin; x <= xmax; ++x)
    for (Integer y = ymin; y <= ymax; ++y) {
      LatticePoint q{x, y};
      bool inside = std::all_of(es.begin(), es.end(), [&](const EdgeData& e) { return pairing(q, e.inner_normal) >= -e.height; });
      if (inside) out.push_back(q);
    }
  return out;
}

LatticePoint vertex_sum(const Polygon& p) {
  LatticePoint s{0, 0};
  for (const auto& v : p.vertices()) s = s + v;
  return s;
}

Polygon normal_form(const Polygon& p) {
  // Each edge E with inner normal n and height r is sent to the horizontal line
  // y = r with the polygon below it: y' = -<v,n>. The complementary coordinate is
  // fixed up to sign (both tried) and shear; the shear is pinned by putting the
  // left endpoint of E in [0, r).
  std::vector<LatticePoint> best;
  for (const auto& e : edges(p)) {
    const Integer& n1 = e.inner_normal.u;
    const Integer& n2 = e.inner_normal.v;
    auto eg = extended_gcd(n1, n2);  // s*n1 + t*n2 = 1
    // Rows (m1, m2) and (-n1, -n2) with m1*(-n2) - m2*(-n1) = 1.
    Integer m1 = -eg.t, m2 = eg.s;
    for (int sign : {1, -1}) {
      Integer a = sign * m1, b = sign * m2;
      Integer c = -n1, d = -n2;
      Integer xl = std::min(a * e.from.x + b * e.from.y, a * e.to.x + b * e.to.y);
      Integer k = -floor_div(xl, e.height);
      UnimodularMap u(a + k * c, b + k * d, c, d);
      Polygon cand = transform(p, u);
      if (best.empty() || cand.vertices() < best) best = cand.vertices();
    }
  }
  return convex_hull(best);
}

PointSet minkowski_sum(const PointSet& p, const PointSet& q) {
  if (p.empty() || q.empty()) return {};
  PointSet sums;
  sums.reserve(p.size() * q.size());
  for (const auto& a : p)
    for (const auto& b : q) sums.push_back(a + b);
  return hull_vertices(sums);
}

bool in_cone(const LatticePoint& s, const LatticePoint& p0, const LatticePoint& p1) {
  Integer det = cross(p0, p1);
  Integer lambda = cross(s, p1);
  Integer mu = cross(p0, s);
  if (det < 0) {
    lambda = -lambda;
    mu = -mu;
  }
  return lambda >= 0 && mu >= 0;
}

}  // namespace fano
