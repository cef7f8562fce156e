#pragma once

#include "fano/numeric.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace fano {

struct LatticePoint {
  Integer x, y;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator<(const LatticePoint& p, const LatticePoint& q) {
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  }
  friend LatticePoint operator+(const LatticePoint& p, const LatticePoint& q) { return {p.x + q.x, p.y + q.y}; }
  friend LatticePoint operator-(const LatticePoint& p, const LatticePoint& q) { return {p.x - q.x, p.y - q.y}; }
  friend LatticePoint operator*(const Integer& k, const LatticePoint& p) { return {k * p.x, k * p.y}; }

  bool is_primitive() const;
  std::string str() const;
};

// Element of the dual lattice M.
struct DualVector {
  Integer u, v;

  friend bool operator==(const DualVector&, const DualVector&) = default;
  DualVector operator-() const { return {-u, -v}; }
};

inline Integer pairing(const LatticePoint& p, const DualVector& d) { return p.x * d.u + p.y * d.v; }
inline Integer cross(const LatticePoint& p, const LatticePoint& q) { return p.x * q.y - p.y * q.x; }

// [[a, b], [c, d]] acting on column vectors.
class UnimodularMap {
 public:
  UnimodularMap(Integer a, Integer b, Integer c, Integer d);
  static UnimodularMap identity() { return {1, 0, 0, 1}; }

  LatticePoint operator()(const LatticePoint& p) const { return {a_ * p.x + b_ * p.y, c_ * p.x + d_ * p.y}; }
  UnimodularMap operator*(const UnimodularMap& o) const;  // (this ∘ o)
  UnimodularMap inverse() const;
  Integer determinant() const { return a_ * d_ - b_ * c_; }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }

 private:
  Integer a_, b_, c_, d_;
};

struct EdgeData {
  LatticePoint from, to;  // clockwise
  DualVector inner_normal;
  Integer height;
  Integer length;

  LatticePoint direction() const;  // primitive, from -> to
};

// Edge data of the segment from -> to, as the boundary of a cone containing the
// origin strictly on its clockwise-right side. Throws OriginNotInterior otherwise.
EdgeData make_edge(const LatticePoint& from, const LatticePoint& to);

// Fano polygon: primitive vertices, origin strictly interior, clockwise, starting
// at the lexicographically smallest vertex. Only constructible via convex_hull.
class Polygon {
 public:
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  friend bool operator==(const Polygon&, const Polygon&) = default;
  friend bool operator<(const Polygon& p, const Polygon& q) { return p.vertices_ < q.vertices_; }

  std::string str() const;

 private:
  friend Polygon convex_hull(std::span<const LatticePoint> points);
  explicit Polygon(std::vector<LatticePoint> v) : vertices_(std::move(v)) {}

  std::vector<LatticePoint> vertices_;
};

// Vertices of conv(points), clockwise from the lexicographically smallest;
// degenerate inputs give 0, 1 or 2 points.
std::vector<LatticePoint> hull_vertices(std::span<const LatticePoint> points);

Polygon convex_hull(std::span<const LatticePoint> points);
Polygon transform(const Polygon& p, const UnimodularMap& u);

std::vector<EdgeData> edges(const Polygon& p);
Integer boundary_count(const Polygon& p);
Integer interior_count(const Polygon& p);
Integer area2(const Polygon& p);
std::vector<LatticePoint> lattice_points(const Polygon& p);
LatticePoint vertex_sum(const Polygon& p);

// Canonical representative of the GL(2,Z)-orbit.
Polygon normal_form(const Polygon& p);

using PointSet = std::vector<LatticePoint>;
PointSet minkowski_sum(const PointSet& p, const PointSet& q);

// True iff s = λ·p0 + μ·p1 with λ, μ >= 0 (p0, p1 linearly independent).
bool in_cone(const LatticePoint& s, const LatticePoint& p0, const LatticePoint& p1);

}  // namespace fano
