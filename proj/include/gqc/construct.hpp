#ifndef GQC_CONSTRUCT_HPP
#define GQC_CONSTRUCT_HPP

// Juxtaposition [C_1 | C_2 | ...] of GQC codes, exhaustive search for small
// quasi-cyclic LCD components, and rate / relative distance bookkeeping for
// families built by juxtaposition.

#include <algorithm>
#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gqc/duality.hpp"

namespace gqc {

using Rational = boost::rational<std::int64_t>;

/// Direct sum of the components with their block lists concatenated.
inline GqcCode juxtapose(const std::vector<GqcCode>& parts) {
  if (parts.empty()) throw std::invalid_argument("juxtapose needs at least one code");
  const Field& F = parts[0].field();
  std::vector<int> blocks;
  for (const auto& p : parts) {
    require_same_field(F, p.field(), "juxtapose");
    blocks.insert(blocks.end(), p.blocks().begin(), p.blocks().end());
  }
  GqcCode out(F, blocks);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (const auto& g : p.generators()) {
      GenTuple t;
      for (std::size_t j = 0; j < blocks.size(); ++j)
        t.push_back(j >= off && j < off + p.ell() ? g[j - off] : RingElem(F, blocks[j]));
      out.add_generator(std::move(t));
    }
    off += p.ell();
  }
  return out;
}

struct FoundCode {
  GqcCode code;
  std::size_t k = 0;
  std::size_t d = 0;
};

/// All distinct nonzero one-generator QC codes of co-index m and index ell
/// that are LCD, in the order their first generator appears when the
/// coefficient tuples are enumerated lexicographically. The search space is
/// q^{m*ell} tuples and is refused beyond `budget`.
inline std::vector<FoundCode> find_qccd(const Field& F, int m, std::size_t ell, std::size_t max_results,
                                        std::uint64_t budget = default_budget()) {
  const std::size_t n = static_cast<std::size_t>(m) * ell;
  std::uint64_t total = 0;
  if (!detail::pow_within(F.size(), n, budget, total))
    throw BudgetExceeded("QCCD search over " + std::to_string(F.size()) + "^" + std::to_string(n) +
                         " generators exceeds the budget of " + std::to_string(budget));
  const std::vector<int> blocks(ell, m);
  std::vector<FoundCode> out;
  std::vector<LinearCode> seen;
  Vec digits(n, 0);
  for (std::uint64_t idx = 1; idx < total && out.size() < max_results; ++idx) {
    for (std::size_t i = 0; i < n; ++i) {
      if (++digits[i] < F.size()) break;
      digits[i] = 0;
    }
    GqcCode C(F, blocks, {unflatten(F, blocks, digits)});
    LinearCode L = to_linear(C);
    if (std::find(seen.begin(), seen.end(), L) != seen.end()) continue;
    seen.push_back(L);
    if (!L.intersect(L.dual()).is_zero()) continue;
    const std::size_t d = min_distance(L);
    out.push_back({std::move(C), L.dimension(), d});
  }
  return out;
}

struct CodeParams {
  std::size_t n = 0, k = 0, d = 0;  // d unused when k == 0
};

struct FamilyRow {
  std::size_t step = 0;
  std::size_t length = 0, k = 0, d = 0;
  Rational rate, relative_distance;
};

/// Parameters of the juxtaposition of codes with the given parameters:
/// lengths and dimensions add, distance is the least over nonzero components.
inline CodeParams juxtaposed_params(const std::vector<CodeParams>& parts) {
  CodeParams out;
  std::optional<std::size_t> d;
  for (const auto& p : parts) {
    out.n += p.n;
    out.k += p.k;
    if (p.k > 0) d = d ? std::min(*d, p.d) : p.d;
  }
  if (!d) throw std::invalid_argument("juxtaposition of zero codes has no minimum distance");
  out.d = *d;
  return out;
}

/// One row per step: parameters of the juxtaposed code and its rate and
/// relative distance as exact fractions.
inline std::vector<FamilyRow> family_accounting(const std::vector<std::vector<CodeParams>>& steps) {
  std::vector<FamilyRow> rows;
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const auto p = juxtaposed_params(steps[s]);
    if (p.n == 0) throw std::invalid_argument("step " + std::to_string(s + 1) + " has length 0");
    const auto n = static_cast<std::int64_t>(p.n);
    rows.push_back({s + 1, p.n, p.k, p.d, Rational(static_cast<std::int64_t>(p.k), n),
                    Rational(static_cast<std::int64_t>(p.d), n)});
  }
  return rows;
}

/// R = sum_i (n_i / n) R_i.
inline Rational weighted_rate(const std::vector<CodeParams>& parts) {
  std::int64_t n = 0;
  for (const auto& p : parts) n += static_cast<std::int64_t>(p.n);
  Rational r = 0;
  for (const auto& p : parts) {
    const auto ni = static_cast<std::int64_t>(p.n);
    r += Rational(ni, n) * Rational(static_cast<std::int64_t>(p.k), ni);
  }
  return r;
}

/// delta = min_i (n_i / n) delta_i over components of nonzero dimension.
inline Rational weighted_relative_distance(const std::vector<CodeParams>& parts) {
  std::int64_t n = 0;
  for (const auto& p : parts) n += static_cast<std::int64_t>(p.n);
  std::optional<Rational> best;
  for (const auto& p : parts) {
    if (p.k == 0) continue;
    const auto ni = static_cast<std::int64_t>(p.n);
    const Rational v = Rational(ni, n) * Rational(static_cast<std::int64_t>(p.d), ni);
    best = best ? std::min(*best, v) : v;
  }
  if (!best) throw std::invalid_argument("no component of nonzero dimension");
  return *best;
}

inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline void write_family_csv(std::ostream& os, const std::vector<FamilyRow>& rows) {
  os << "step,length,k,d,rate,relative_distance\n";
  for (const auto& r : rows)
    os << r.step << ',' << r.length << ',' << r.k << ',' << r.d << ',' << to_string(r.rate) << ','
       << to_string(r.relative_distance) << '\n';
}

}  // namespace gqc

#endif  // GQC_CONSTRUCT_HPP
