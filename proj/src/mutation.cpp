#include "fano/mutation.hpp"

#include "fano/error.hpp"

#include <algorithm>
#include <set>

namespace fano {

MutationSpec mutation_spec(const EdgeData& e) { return {e, e.direction()}; }

bool admissible(const Polygon&, const EdgeData& e) { return e.length >= e.height; }

bool admissible_literal(const Polygon&, const EdgeData& e) { return e.length + 1 >= e.height; }

namespace {

struct SliceFrame {
  LatticePoint v, u0;
  Integer orient;  // cross(v, u0) = ±1

  // q = t·v + h·u0
  std::pair<Integer, Integer> coords(const LatticePoint& q, const DualVector& w) const {
    return {cross(q, u0) * orient, pairing(q, w)};
  }
  LatticePoint point(const Integer& t, const Integer& h) const { return t * v + h * u0; }
};

}  // namespace

MutationTrace mutate(const Polygon& p, const MutationSpec& spec) {
  const EdgeData& e = spec.edge;
  if (!admissible(p, e))
    throw Error(ErrorKind::NotAdmissible, "edge " + e.from.str() + "-" + e.to.str() + " has length < height");
  const DualVector& w = e.inner_normal;
  if (pairing(spec.factor, w) != 0 || !spec.factor.is_primitive())
    throw Error(ErrorKind::NotAdmissible, "factor is not a primitive vector of the edge direction");

  auto eg = extended_gcd(w.u, w.v);
  SliceFrame frame{spec.factor, {eg.s, eg.t}, 0};
  frame.orient = cross(frame.v, frame.u0);

  std::vector<std::pair<Integer, Integer>> vs;  // (t, h)
  for (const auto& q : p.vertices()) vs.push_back(frame.coords(q, w));
  Integer hmin = vs[0].second, hmax = vs[0].second;
  for (const auto& [t, h] : vs) {
    hmin = std::min(hmin, h);
    hmax = std::max(hmax, h);
  }

  MutationTrace trace{p, p, p, spec, frame.u0, {}};
  std::vector<LatticePoint> pts;
  for (Integer h = hmin; h <= hmax; ++h) {
    bool has_lo = false;
    Integer lo, hi;
    bool vertex_here = false;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const auto& [t1, h1] = vs[i];
      const auto& [t2, h2] = vs[(i + 1) % vs.size()];
      if (h1 == h) vertex_here = true;
      if ((h < h1 && h < h2) || (h > h1 && h > h2)) continue;
      Integer c_lo, c_hi;
      if (h1 == h2) {
        c_lo = std::min(t1, t2);
        c_hi = std::max(t1, t2);
      } else {
        Integer num = t1 * (h2 - h1) + (h - h1) * (t2 - t1);
        Integer den = h2 - h1;
        c_lo = ceil_div(num, den);
        c_hi = floor_div(num, den);
      }
      if (!has_lo) {
        lo = c_lo;
        hi = c_hi;
        has_lo = true;
      } else {
        lo = std::min(lo, c_lo);
        hi = std::max(hi, c_hi);
      }
    }
    if (!has_lo || lo > hi) continue;
    Slice s{lo, hi, lo, hi, false};
    if (h < 0) {
      Integer need = -h;
      if (hi - lo >= need) {
        s.new_hi = hi - need;
      } else if (vertex_here) {
        throw Error(ErrorKind::NotAdmissible, "no G_h exists at level " + h.str());
      } else {
        s.empty_after = true;
      }
    } else {
      s.new_hi = hi + h;
    }
    if (!s.empty_after) {
      pts.push_back(frame.point(s.new_lo, h));
      pts.push_back(frame.point(s.new_hi, h));
    }
    trace.slices.emplace(h, std::move(s));
  }
  trace.raw_target = convex_hull(pts);
  trace.source = normal_form(p);
  trace.target = normal_form(trace.raw_target);
  return trace;
}

Polygon mutate_polygon(const Polygon& p, const EdgeData& e) { return mutate(p, mutation_spec(e)).raw_target; }

std::vector<MutationTrace> all_mutations(const Polygon& p) {
  std::vector<MutationTrace> out;
  for (const auto& e : edges(p))
    if (admissible(p, e)) out.push_back(mutate(p, mutation_spec(e)));
  return out;
}

std::vector<Polygon> mutation_neighbours(const Polygon& p) {
  std::set<Polygon> seen;
  std::vector<Polygon> out;
  for (const auto& e : edges(p)) {
    if (!admissible(p, e)) continue;
    Polygon q = normal_form(mutate_polygon(p, e));
    if (seen.insert(q).second) out.push_back(std::move(q));
  }
  return out;
}

bool is_minimal(const Polygon& p) {
  Integer b = boundary_count(p);
  for (const auto& e : edges(p))
    if (admissible(p, e) && boundary_count(mutate_polygon(p, e)) < b) return false;
  return true;
}

MinimizeResult minimize(const Polygon& p) {
  MinimizeResult out{p, {}};
  Integer best = boundary_count(p);
  bool improved = true;
  while (improved) {
    improved = false;
    for (const auto& e : edges(out.minimal)) {
      if (!admissible(out.minimal, e)) continue;
      auto trace = mutate(out.minimal, mutation_spec(e));
      Integer b = boundary_count(trace.raw_target);
      if (b < best) {
        best = b;
        out.minimal = trace.raw_target;
        out.path.push_back(std::move(trace));
        improved = true;
        break;
      }
    }
  }
  return out;
}

MinimalityReport minimality_witnesses(const Polygon& p) {
  MinimalityReport r{true, true, true, true};
  const Integer b = boundary_count(p), i = interior_count(p), a = area2(p);
  for (const auto& e : edges(p)) {
    if (!admissible(p, e)) continue;
    Polygon q = mutate_polygon(p, e);
    if (boundary_count(q) < b) r.by_boundary = false;
    if (interior_count(q) < i) r.by_interior = false;
    if (area2(q) < a) r.by_volume = false;
  }
  for (const auto& e : edges(p)) {
    Integer hmax = pairing(p.vertices()[0], e.inner_normal);
    for (const auto& v : p.vertices()) hmax = std::max(hmax, pairing(v, e.inner_normal));
    // |E ∩ N| - 1 >= |h_min|  implies  |h_min| <= h_max
    if (e.length >= e.height && e.height > hmax) r.by_edge_condition = false;
  }
  return r;
}

}  // namespace fano
