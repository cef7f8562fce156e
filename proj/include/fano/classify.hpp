#pragma once

#include "fano/lattice.hpp"
#include "fano/mutation.hpp"
#include "fano/singularity.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fano {

std::vector<EdgeData> special_facets(const Polygon& p);

// Either an explicit multiset ("1x1/6(1,1)") or a family ("family:1/3+1/6").
// A family ranges over multiplicity vectors with the last listed type >= 1 and
// total multiplicity <= mult_max.
struct BasketSpec {
  std::string text;
  bool family = false;
  std::vector<QuotientSingularity> types;  // listed order, distinct
  std::vector<QuotientSingularity> fixed;  // explicit basket, sorted

  static BasketSpec parse(const std::string& text);

  std::vector<std::vector<QuotientSingularity>> baskets(unsigned mult_max) const;
  // Multiplicity of each of types in basket.
  std::vector<unsigned> multiplicities(const std::vector<QuotientSingularity>& basket) const;
};

struct SearchBounds {
  std::optional<Integer> n_max;  // default: degree bound per basket
  unsigned mult_max = 2;
  std::int64_t region_expand = 0;  // widen the search region (stability check)
  // Residue-free edges may be taller than m_B up to this height (m_P > m_B).
  // Unset: 2 m_B. Values <= m_B give the strict m_P = m_B search.
  std::optional<std::int64_t> t_height_max;
};

std::int64_t effective_height_cap(const std::vector<QuotientSingularity>& basket, const SearchBounds& bounds);

// Largest n with 12 - n - Σ A > 0.
Integer default_n_max(const std::vector<QuotientSingularity>& basket);

// F = conv{(a,l),(b,l)}, -l < a <= 0 < ... , the facet on top.
struct SpecialFacetInput {
  std::int64_t l = 0, a = 0, b = 0;

  friend bool operator==(const SpecialFacetInput&, const SpecialFacetInput&) = default;
  friend auto operator<=>(const SpecialFacetInput&, const SpecialFacetInput&) = default;
  std::string str() const;
};

// Points (x,y) with -l(l+1) <= y <= l-1 between L1 (through (a,l) and (-m,0))
// and L2 (through (b,l) and (m,0)), m = m_B; widened by expand in every direction.
struct SearchRegion {
  std::int64_t l, a, b, m, expand;
  std::int64_t y_min, y_max;

  SearchRegion(const SpecialFacetInput& in, std::int64_t m_B, std::int64_t expand = 0);
  // Integer x-range at height y; empty when lo > hi.
  std::pair<std::int64_t, std::int64_t> row(std::int64_t y) const;
  bool contains(std::int64_t x, std::int64_t y) const;
  bool has_point_below(std::int64_t y) const;  // any lattice point with height <= y
  std::vector<LatticePoint> primitive_points() const;
};

// Facet heights run up to height_cap (default m_B); the L1/L2 lines use it too.
std::vector<SpecialFacetInput> enumerate_facet_inputs(const std::vector<QuotientSingularity>& basket,
                                                      std::int64_t expand = 0, std::int64_t height_cap = 0);

struct GrowStats {
  std::uint64_t nodes = 0;
  std::uint64_t completed = 0;
};

// Completed constructions that pass the output filters: residues equal to the
// basket, n <= n_max, minimal, F special, m_P = m_B (or m_P <= height_cap when
// height_cap > m_B). Coordinates as built (F on top).
std::vector<Polygon> grow(const SpecialFacetInput& input, const std::vector<QuotientSingularity>& basket,
                          const Integer& n_max, std::int64_t expand = 0, GrowStats* stats = nullptr,
                          std::int64_t height_cap = 0);

struct EquivalenceBudget {
  unsigned boundary_factor = 3;  // boundary count cap relative to the group minimum
  unsigned max_depth = 8;
};

struct MergeEvidence {
  std::size_t from = 0, to = 0;      // member indices
  std::vector<Polygon> path;         // normal forms, from .. to
};

enum class SeparationKind { SingularityContent, PeriodFixture, Unresolved };
std::string to_string(SeparationKind k);

struct SeparationEvidence {
  std::size_t class_a = 0, class_b = 0;
  SeparationKind kind = SeparationKind::Unresolved;
  std::string detail;
};

struct EquivalenceClass {
  std::vector<std::size_t> members;  // indices into the input list, ascending
  std::size_t representative = 0;
  std::vector<MergeEvidence> merges;
};

struct EquivalencePartition {
  std::vector<EquivalenceClass> classes;
  std::vector<SeparationEvidence> separations;  // every pair of classes
};

// Bounded breadth-first search in the mutation graph. Parallel over start
// polygons; the serial path is the reference.
EquivalencePartition equivalence_classes(const std::vector<Polygon>& polys, const EquivalenceBudget& budget = {},
                                         bool parallel = true);

struct InputRecord {
  std::string basket;  // basket_to_string
  SpecialFacetInput input;
  std::vector<Polygon> outputs;
  std::uint64_t nodes = 0;
};

struct ClassRow {
  std::size_t index = 0;
  Polygon representative;  // as built, facet on top
  Integer n;
  std::vector<unsigned> multiplicities;
  Rational degree;
  std::vector<Polygon> members;  // normal forms
};

struct ClassificationRun {
  std::string basket_spec;
  SearchBounds bounds;
  EquivalenceBudget budget;
  std::string config_hash;
  std::vector<InputRecord> inputs;  // in enumeration order
  bool complete = false;
  std::vector<Polygon> outputs;     // distinct normal forms, sorted
  std::vector<ClassRow> rows;
  std::vector<SeparationEvidence> separations;
  std::string disclaimer;
};

struct ClassifyOptions {
  bool parallel = true;
  std::optional<std::size_t> max_inputs;  // stop after this many new inputs (interruption)
  const ClassificationRun* resume = nullptr;
};

std::string config_hash(const BasketSpec& spec, const SearchBounds& bounds, const EquivalenceBudget& budget);

ClassificationRun classify(const BasketSpec& spec, const SearchBounds& bounds, const EquivalenceBudget& budget = {},
                           const ClassifyOptions& options = {});

// Row order: multiplicities, then n, then representative normal form.
void finalize_run(ClassificationRun& run, const BasketSpec& spec, bool parallel = true);

}  // namespace fano
