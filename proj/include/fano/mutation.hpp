#pragma once

#include "fano/lattice.hpp"

#include <map>
#include <vector>

namespace fano {

struct MutationSpec {
  EdgeData edge;          // ω = edge.inner_normal
  LatticePoint factor;    // v_E: primitive, <v_E, ω> = 0; the clockwise edge direction
};

MutationSpec mutation_spec(const EdgeData& e);

struct Slice {
  Integer lo, hi;  // lattice slice ω_h(P) as offsets along v_E from h·u0 (before shifting)
  Integer new_lo, new_hi;
  bool empty_after = false;  // G_h = ∅
};

struct MutationTrace {
  Polygon source, target;        // normal forms
  Polygon raw_target;            // the mutated polygon in the source's coordinates
  MutationSpec spec;
  LatticePoint level_one;        // u0 with <u0, ω> = 1 (slice coordinates: t·v_E + h·u0)
  std::map<Integer, Slice> slices;
};

// Length >= height: the Minkowski difference exists at the edge level.
bool admissible(const Polygon& p, const EdgeData& e);
// |E ∩ N| >= r_E, as literally stated; kept for the concordance report.
bool admissible_literal(const Polygon& p, const EdgeData& e);

MutationTrace mutate(const Polygon& p, const MutationSpec& spec);
Polygon mutate_polygon(const Polygon& p, const EdgeData& e);

// One trace per admissible edge, clockwise from the canonical start.
std::vector<MutationTrace> all_mutations(const Polygon& p);
// Normal forms of all single-mutation images, without repeats.
std::vector<Polygon> mutation_neighbours(const Polygon& p);

bool is_minimal(const Polygon& p);

struct MinimizeResult {
  Polygon minimal;
  std::vector<MutationTrace> path;
};

MinimizeResult minimize(const Polygon& p);

struct MinimalityReport {
  bool by_boundary = false;
  bool by_interior = false;
  bool by_volume = false;
  bool by_edge_condition = false;

  bool concordant() const {
    return by_boundary == by_interior && by_interior == by_volume && by_volume == by_edge_condition;
  }
};

MinimalityReport minimality_witnesses(const Polygon& p);

}  // namespace fano
