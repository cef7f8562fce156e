#pragma once

#include "fano/lattice.hpp"
#include "fano/reference.hpp"

#include <vector>

namespace fano::test {

inline Polygon poly(std::vector<LatticePoint> v) { return convex_hull(v); }

inline Polygon p115() { return poly({{0, 1}, {1, 0}, {-5, -1}}); }
inline Polygon p115_image() { return poly({{0, 1}, {-5, -1}, {1, -7}}); }
inline Polygon p2() { return poly({{0, 1}, {1, 0}, {-1, -1}}); }
inline Polygon square() { return poly({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }
inline Polygon box() { return poly({{1, 1}, {1, -1}, {-1, -1}, {-1, 1}}); }

inline std::vector<const ReferenceRow*> table_rows() {
  std::vector<const ReferenceRow*> out;
  for (const auto* f : {&reference_thirds_sixths(), &reference_fifths()})
    for (const auto& r : f->rows) out.push_back(&r);
  return out;
}

// Table polygons plus a few small ones.
inline std::vector<Polygon> corpus() {
  std::vector<Polygon> out{p115(), p115_image(), p2(), square(), box()};
  for (const auto* r : table_rows()) out.push_back(poly(r->vertices));
  return out;
}

}  // namespace fano::test
