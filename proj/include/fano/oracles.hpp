#pragma once

// Slow, direct reference computations used by the acceptance suite and tests.

#include "fano/lattice.hpp"
#include "fano/mutation.hpp"

#include <random>

namespace fano::oracle {

struct LatticeCounts {
  Integer boundary, interior;
};

// Every point of the bounding box tested against every edge.
LatticeCounts brute_force_counts(const Polygon& p);

// 2 * area of the dual polygon {u : <u, v> >= -1 for all vertices v}.
Rational dual_area2(const Polygon& p);

// |k P* ∩ M|.
Integer dual_dilate_count(const Polygon& p, std::int64_t k);

// Mutation built from lattice points of P grouped by level, with no slice arithmetic.
Polygon brute_force_mutation(const Polygon& p, const EdgeData& e);

// The edge of q with inner normal w.
EdgeData edge_with_normal(const Polygon& q, const DualVector& w);

UnimodularMap random_unimodular(std::mt19937_64& rng, int steps = 6);

// Random Fano polygon with vertices in [-r, r]^2 and area2 <= max_area2.
Polygon random_fano_polygon(std::mt19937_64& rng, int r, const Integer& max_area2);

}  // namespace fano::oracle
