#pragma once

#include "fano/lattice.hpp"
#include "fano/rational_function.hpp"
#include "fano/singularity.hpp"

#include <vector>

namespace fano {

struct DiscrepancyData {
  QuotientSingularity singularity;
  HJFraction hj;  // of R/a for 1/R(1,a)
  std::vector<Integer> alphas, betas;
  std::vector<Rational> discrepancies;
};

DiscrepancyData discrepancies(const QuotientSingularity& s);

// A_σ = k + 1 - Σ d_i² a_i + 2 Σ d_i d_{i+1}; the smooth cone contributes 1.
Rational degree_contribution(const QuotientSingularity& s);

// δ_j = (1/R) Σ_{ε^R=1, ε≠1} ε^j / ((1-ε)(1-ε^a)) for 1/R(1,a), computed exactly.
Rational dedekind_delta(const QuotientSingularity& s, const Integer& j);

// Q_σ = (1/(1-t^R)) Σ_{i=1}^{R-1} (δ_{(a+1)i} - δ_0) t^{i-1}, normalized.
RationalFunction1 riemann_roch_term(const QuotientSingularity& s);

Rational anticanonical_degree(const Polygon& p);

struct HilbertSeries {
  RationalFunction1 function;     // normalized
  std::vector<Rational> series;   // t^0 .. t^order
};

HilbertSeries hilbert_series(const Polygon& p, std::size_t order);

struct ShatteringResult {
  RationalFunction1 sum_Q;
  Rational sum_A;
  EdgeData tau;           // the hyperplane sum
  bool tau_is_T = false;  // sums are 0 and 1 when tau is a T-cone
};

// Cones given by consecutive segments u0->u1, u1->u2, ... with parallel edge vectors.
ShatteringResult shattering_check(const std::vector<EdgeData>& cones);

}  // namespace fano
