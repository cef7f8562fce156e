#include "fano/invariants.hpp"

#include "fano/error.hpp"

namespace fano {

DiscrepancyData discrepancies(const QuotientSingularity& s) {
  DiscrepancyData out{s, {}, {}, {}, {}};
  if (s.is_smooth()) return out;
  const Integer& R = s.order();
  out.hj = hj_fraction(R, s.weight());
  const auto& a = out.hj.entries;
  const std::size_t k = a.size();
  out.alphas.assign(k, 0);
  out.betas.assign(k, 0);
  // α_1 = 1, α_{i+1} = a_i α_i - α_{i-1};  β_k = 1, β_{i-1} = a_i β_i - β_{i+1}.
  Integer prev = 0, cur = 1;
  for (std::size_t i = 0; i < k; ++i) {
    out.alphas[i] = cur;
    Integer next = a[i] * cur - prev;
    prev = cur;
    cur = next;
  }
  prev = 0;
  cur = 1;
  for (std::size_t i = k; i-- > 0;) {
    out.betas[i] = cur;
    Integer next = a[i] * cur - prev;
    prev = cur;
    cur = next;
  }
  for (std::size_t i = 0; i < k; ++i) out.discrepancies.push_back(Rational(out.alphas[i] + out.betas[i], R) - 1);
  return out;
}

Rational degree_contribution(const QuotientSingularity& s) {
  if (s.is_smooth()) return 1;
  auto dd = discrepancies(s);
  const auto& d = dd.discrepancies;
  const auto& a = dd.hj.entries;
  Rational A = Rational(static_cast<long>(d.size()) + 1);
  for (std::size_t i = 0; i < d.size(); ++i) A -= d[i] * d[i] * a[i];
  for (std::size_t i = 0; i + 1 < d.size(); ++i) A += 2 * d[i] * d[i + 1];
  return A;
}

Rational dedekind_delta(const QuotientSingularity& s, const Integer& j) {
  if (s.is_smooth()) return 0;
  // With 1/(1-ζ) = -(1/R) Σ_{m<R} m ζ^m for ζ^R = 1, ζ ≠ 1, and
  // Σ_{ε≠1} ε^s = R·[R | s] - 1, the double sum over m collapses to
  //   δ_j = R^-3 Σ_{m'<R} m' (R·((-j - a m') mod R) - R(R-1)/2).
  const Integer& R = s.order();
  const Integer& a = s.weight();
  Integer total = 0;
  const Integer half = R * (R - 1) / 2;
  for (Integer m = 1; m < R; ++m) total += m * (R * mod_floor(-j - a * m, R) - half);
  return Rational(total, R * R * R);
}

RationalFunction1 riemann_roch_term(const QuotientSingularity& s) {
  if (s.is_smooth()) return {};
  const Integer& R = s.order();
  const std::size_t Rs = static_cast<std::size_t>(to_int64(R));
  const Rational d0 = dedekind_delta(s, 0);
  std::vector<Rational> num(Rs - 1, Rational(0));
  for (std::size_t i = 1; i < Rs; ++i) num[i - 1] = dedekind_delta(s, (s.weight() + 1) * i) - d0;
  return RationalFunction1(UPoly(std::move(num)), {{Rs, 1}}).normalized();
}

Rational anticanonical_degree(const Polygon& p) {
  auto sc = singularity_content(p);
  Rational deg = Rational(12) - sc.n;
  for (const auto& s : sc.basket) deg -= degree_contribution(s);
  return deg;
}

HilbertSeries hilbert_series(const Polygon& p, std::size_t order) {
  auto sc = singularity_content(p);
  Rational K2 = anticanonical_degree(p);
  RationalFunction1 h(UPoly({Rational(1), K2 - 2, Rational(1)}), {{1, 3}});
  for (const auto& s : sc.basket) h = h + riemann_roch_term(s);
  h = h.normalized();
  return {h, h.series(order)};
}

ShatteringResult shattering_check(const std::vector<EdgeData>& cones) {
  if (cones.empty()) throw Error(ErrorKind::NotHyperplaneSummable, "no cones given");
  for (std::size_t i = 0; i + 1 < cones.size(); ++i) {
    if (cones[i].to != cones[i + 1].from)
      throw Error(ErrorKind::NotHyperplaneSummable, "consecutive cones do not share a ray");
    if (cross(cones[i].to - cones[i].from, cones[i + 1].to - cones[i + 1].from) != 0)
      throw Error(ErrorKind::NotHyperplaneSummable, "edge vectors are not parallel");
  }
  ShatteringResult out{{}, 0, make_edge(cones.front().from, cones.back().to), false};
  for (const auto& c : cones) {
    auto s = cone_singularity(c);
    out.sum_A += degree_contribution(s);
    out.sum_Q = out.sum_Q + riemann_roch_term(s);
  }
  out.sum_Q = out.sum_Q.normalized();
  out.tau_is_T = is_T_singularity(cone_singularity(out.tau));
  return out;
}

}  // namespace fano
