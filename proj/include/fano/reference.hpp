#pragma once

#include "fano/lattice.hpp"

#include <string>
#include <vector>

namespace fano {

// Published classification rows: one polygon per mutation class.
struct ReferenceRow {
  std::string id;  // "1.7"
  std::vector<LatticePoint> vertices;
  Integer n;
  std::vector<unsigned> multiplicities;  // in family order
  Rational degree;
};

struct ReferenceFamily {
  std::string basket;  // family syntax
  std::vector<ReferenceRow> rows;
};

// {m1 x 1/3(1,1), m2 x 1/6(1,1)}, m2 >= 1: 14 classes.
const ReferenceFamily& reference_thirds_sixths();
// {m x 1/5(1,1)}, m >= 1: 12 classes.
const ReferenceFamily& reference_fifths();

}  // namespace fano
