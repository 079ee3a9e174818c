#ifndef GQC_BOUNDS_HPP
#define GQC_BOUNDS_HPP

// Jensen-type lower bound on the minimum distance of a GQC code, and the
// classical Jensen bound for quasi-cyclic codes computed by its own route.

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gqc/gqc.hpp"

namespace gqc {

/// Unset means a structurally zero column (+infinity).
using ColumnDistance = std::optional<std::size_t>;

/// Minimum distance of <I_{f_1}> + ... + <I_{f_u}> in R_m; +inf when none of
/// the f's divides x^m - 1.
inline ColumnDistance column_sum_distance(const Field& F, const std::vector<Poly>& level, int m,
                                          const DistanceOptions& opt = {}) {
  require_coprime_block(F, m);
  RingElem e(F, m);
  for (const auto& f : level) e = e + primitive_idempotent(F, m, f);
  if (e.is_zero()) return std::nullopt;
  LinearCode L(F, static_cast<std::size_t>(m));
  RingElem cur = e;
  while (L.insert(cur.coeffs())) cur = cur.shifted();
  return min_distance(L, opt);
}

struct BoundReport {
  std::vector<std::size_t> order;                        // constituent indices i_1..i_g (0-based)
  std::vector<std::size_t> constituent_distance;         // d_1 <= ... <= d_g
  std::vector<std::vector<ColumnDistance>> columns;      // columns[u][t]
  std::vector<std::size_t> level_value;                  // D_1..D_g
  std::size_t bound = 0;
  std::optional<std::size_t> true_distance;
};

inline BoundReport jensen_bound_gqc(const GqcCode& C, const DistanceOptions& opt = {}) {
  const ConstituentSet S = decompose(C);
  BoundReport rep;
  std::vector<std::pair<std::size_t, std::size_t>> nz;  // (d, index)
  for (std::size_t i = 0; i < S.parts.size(); ++i)
    if (!S.parts[i].code.is_zero()) nz.emplace_back(min_distance(S.parts[i].code, opt), i);
  if (nz.empty()) throw std::invalid_argument("zero code has no minimum distance bound");
  std::stable_sort(nz.begin(), nz.end());
  std::vector<Poly> level;
  for (const auto& [d, i] : nz) {
    rep.order.push_back(i);
    rep.constituent_distance.push_back(d);
    level.push_back(S.parts[i].factor.f);
    std::vector<ColumnDistance> row;
    std::vector<std::size_t> finite;
    for (int m : S.blocks) {
      row.push_back(column_sum_distance(S.field, level, m, opt));
      if (row.back()) finite.push_back(*row.back());
    }
    if (finite.size() < d)
      throw std::logic_error("internal consistency failure: level " + std::to_string(rep.order.size()) + " has " +
                             std::to_string(finite.size()) + " finite columns but d_u = " + std::to_string(d));
    std::sort(finite.begin(), finite.end());
    std::size_t D = 0;
    for (std::size_t t = 0; t < d; ++t) D += finite[t];
    rep.columns.push_back(std::move(row));
    rep.level_value.push_back(D);
  }
  rep.bound = *std::min_element(rep.level_value.begin(), rep.level_value.end());
  return rep;
}

/// Jensen's bound for a quasi-cyclic code (all blocks equal to m):
/// d(C) >= min_u d(C_{i_u}) * d(<theta_{i_1}> + ... + <theta_{i_u}>).
/// Constituents are evaluated at powers of a primitive m-th root beta in the
/// splitting field, and the column codes are generated by (x^m-1)/prod f.
inline std::size_t jensen_bound_qc(const GqcCode& C, const DistanceOptions& opt = {}) {
  if (C.blocks().empty()) throw std::invalid_argument("QC code needs at least one block");
  const int m = C.blocks()[0];
  for (int b : C.blocks())
    if (b != m) throw std::invalid_argument("Jensen QC bound needs equal block lengths");
  const Field& F = C.field();
  const Factorization fact = factor_xm_minus_1(F, m);
  int t = 1;
  for (const auto& c : fact.cosets) t = std::lcm(t, static_cast<int>(c.size()));
  const Field S = t == 1 ? F : Field::unchecked_extension(F, find_irreducible(F, t));
  Elem beta = 1;
  if (m > 1) {
    const auto primes = detail::prime_factors(static_cast<std::uint64_t>(m));
    for (Elem cand = 1; cand < S.size(); ++cand) {
      const Elem b = S.pow(cand, (S.size() - 1) / static_cast<std::uint64_t>(m));
      if (std::all_of(primes.begin(), primes.end(),
                      [&](std::uint64_t r) { return S.pow(b, static_cast<std::uint64_t>(m) / r) != 1; })) {
        beta = b;
        break;
      }
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> nz;
  for (std::size_t i = 0; i < fact.factors.size(); ++i) {
    Elem root = 0;
    for (int a = 0; a < m && root == 0; ++a) {
      const Elem r = S.pow(beta, static_cast<std::uint64_t>(a));
      if (fact.factors[i].eval_in(S, r) == 0) root = r;
    }
    LinearCode Ci(S, C.ell());
    for (const auto& g : C.generators()) {
      Vec v(C.ell());
      for (std::size_t j = 0; j < C.ell(); ++j) v[j] = detail::peval(S, g[j].coeffs(), root);
      Ci.insert(std::move(v));
    }
    if (!Ci.is_zero()) nz.emplace_back(min_distance(Ci, opt), i);
  }
  if (nz.empty()) throw std::invalid_argument("zero code has no minimum distance bound");
  std::stable_sort(nz.begin(), nz.end());
  Poly check = Poly::constant(F, 1);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& [d, i] : nz) {
    check = check * fact.factors[i];
    const Poly gen = divrem(Poly::xm_minus_one(F, m), check).first;
    LinearCode cyc(F, static_cast<std::size_t>(m));
    RingElem cur = RingElem::from_poly(gen, m);
    for (int k = 0; k < m; ++k, cur = cur.shifted()) cyc.insert(cur.coeffs());
    best = std::min(best, d * min_distance(cyc, opt));
  }
  return best;
}

}  // namespace gqc

#endif  // GQC_BOUNDS_HPP
