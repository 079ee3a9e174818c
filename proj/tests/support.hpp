#ifndef GQC_TESTS_SUPPORT_HPP
#define GQC_TESTS_SUPPORT_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "gqc.hpp"

namespace gqc::testing {

inline Field F2() { return Field::prime(2); }
inline Field F3() { return Field::prime(3); }
inline Field F5() { return Field::prime(5); }
inline Field F4() { return make_extension(F2(), {1, 1, 1}); }

using Rng = std::mt19937_64;

inline Elem random_elem(Rng& rng, const Field& F) { return rng() % F.size(); }

inline Vec random_vec(Rng& rng, const Field& F, std::size_t n) {
  Vec v(n);
  for (auto& e : v) e = random_elem(rng, F);
  return v;
}

/// Random polynomial of degree < m; sometimes zero, sometimes a divisor of x^m-1
/// times a random unit-ish cofactor, so constituents vary between zero and full.
inline std::vector<Elem> random_block_poly(Rng& rng, const Field& F, int m) {
  switch (rng() % 4) {
    case 0:
      return {};
    case 1: {
      const auto fact = factor_xm_minus_1(F, m);
      Poly g = Poly::constant(F, 1);
      for (const auto& f : fact.factors)
        if (rng() % 2) g = g * f;
      g = g % Poly::xm_minus_one(F, m);
      return g.raw();
    }
    default:
      return random_vec(rng, F, static_cast<std::size_t>(m));
  }
}

inline GqcCode random_gqc(Rng& rng, const Field& F, const std::vector<int>& pool, std::size_t max_ell,
                          std::size_t max_gens) {
  const std::size_t ell = 1 + rng() % max_ell;
  std::vector<int> blocks;
  for (std::size_t j = 0; j < ell; ++j) blocks.push_back(pool[rng() % pool.size()]);
  const std::size_t r = 1 + rng() % max_gens;
  std::vector<std::vector<std::vector<Elem>>> gens;
  for (std::size_t b = 0; b < r; ++b) {
    std::vector<std::vector<Elem>> t;
    for (int m : blocks) t.push_back(random_block_poly(rng, F, m));
    gens.push_back(std::move(t));
  }
  return GqcCode::from_coeffs(F, blocks, gens);
}

inline LinearCode random_linear(Rng& rng, const Field& F, std::size_t n, std::size_t rows) {
  LinearCode L(F, n);
  for (std::size_t i = 0; i < rows; ++i) L.insert(random_vec(rng, F, n));
  return L;
}

/// Block lengths coprime to q from {1,...,13}.
inline std::vector<int> coprime_pool(const Field& F, int max_m = 13) {
  std::vector<int> out;
  for (int m = 1; m <= max_m; ++m)
    if (coprime(F.size(), static_cast<std::uint64_t>(m))) out.push_back(m);
  return out;
}

/// Rank of G W conj(G)^T, the Gram matrix of a code under the weighted form
/// sum_j w_j c_j conj(d_j) (conj = identity for Euclidean).
inline std::size_t gram_rank(const LinearCode& C, const Vec& w, bool hermitian) {
  const Field& E = C.field();
  const auto& G = C.basis();
  std::vector<Vec> gram(G.size(), Vec(G.size(), 0));
  for (std::size_t a = 0; a < G.size(); ++a)
    for (std::size_t b = 0; b < G.size(); ++b)
      for (std::size_t j = 0; j < C.length(); ++j) {
        const Elem d = hermitian ? hermitian_conj(E, G[b][j]) : G[b][j];
        gram[a][b] = E.add(gram[a][b], E.mul(w[j], E.mul(G[a][j], d)));
      }
  return rank_of(E, G.size(), gram);
}

/// Weights 1/m_j on the coordinates of a constituent (1 where unsupported).
inline Vec inverse_block_weights(const Constituent& c, const std::vector<int>& blocks) {
  const Field& F = c.factor.base();
  Vec w(blocks.size(), 1);
  for (auto j : c.supported_coords()) w[j] = F.inv(F.from_int(blocks[j]));
  return w;
}

inline LinearCode random_subcode_on(Rng& rng, const Field& E, std::size_t ell, const std::vector<std::size_t>& coords,
                                    std::size_t rows) {
  LinearCode L(E, ell);
  for (std::size_t r = 0; r < rows; ++r) {
    Vec v(ell, 0);
    for (auto j : coords) v[j] = random_elem(rng, E);
    L.insert(v);
  }
  return L;
}

/// GQC code whose self-reciprocal constituents are self-dual for the weighted
/// Hermitian form (built from coordinate pairs e_a + lambda e_b) and whose
/// pair constituents satisfy C'' = dual of C'. Empty if some support cannot be paired.
inline std::optional<GqcCode> seeded_self_dual(Rng& rng, const Field& F, const std::vector<int>& blocks) {
  auto S = constituent_frame(F, blocks);
  const auto prof = duality_profile(S);
  for (auto i : prof.self_reciprocal) {
    auto& part = S.parts[i];
    const Field& E = part.factor.E;
    const Vec w = inverse_block_weights(part, blocks);
    auto coords = part.supported_coords();
    std::shuffle(coords.begin(), coords.end(), rng);
    while (!coords.empty()) {
      const auto a = coords.back();
      coords.pop_back();
      bool paired = false;
      for (std::size_t bi = 0; bi < coords.size() && !paired; ++bi) {
        const auto b = coords[bi];
        std::vector<Elem> lams;
        for (Elem l = 1; l < E.size(); ++l)
          if (E.add(w[a], E.mul(w[b], E.mul(l, hermitian_conj(E, l)))) == 0) lams.push_back(l);
        if (lams.empty()) continue;
        Vec v(blocks.size(), 0);
        v[a] = 1;
        v[b] = lams[rng() % lams.size()];
        part.code.insert(v);
        coords.erase(coords.begin() + static_cast<std::ptrdiff_t>(bi));
        paired = true;
      }
      if (!paired) return std::nullopt;
    }
  }
  for (const auto& pr : prof.pairs) {
    auto& h = S.parts[pr.h];
    const auto coords = h.supported_coords();
    h.code = random_subcode_on(rng, h.factor.E, blocks.size(), coords, rng() % (coords.size() + 1));
    S.parts[pr.star].code = dual_constituents(S).parts[pr.star].code;
  }
  return reconstruct(S);
}

/// GQC code whose self-reciprocal constituents are LCD for the weighted
/// Hermitian form and whose pair constituents are C'' = iota^{-1}(C') with C'
/// LCD for the weighted Euclidean form; LCD-ness is certified by Gram ranks.
inline GqcCode seeded_lcd(Rng& rng, const Field& F, const std::vector<int>& blocks) {
  auto S = constituent_frame(F, blocks);
  const auto prof = duality_profile(S);
  auto draw = [&](Constituent& part, bool hermitian) {
    const auto coords = part.supported_coords();
    const Vec w = inverse_block_weights(part, blocks);
    while (true) {
      auto L = random_subcode_on(rng, part.factor.E, blocks.size(), coords, rng() % (coords.size() + 1));
      if (gram_rank(L, w, hermitian) == L.dimension()) return L;
    }
  };
  for (auto i : prof.self_reciprocal) S.parts[i].code = draw(S.parts[i], true);
  for (const auto& pr : prof.pairs) {
    S.parts[pr.h].code = draw(S.parts[pr.h], false);
    S.parts[pr.star].code = iota_inverse(S.parts[pr.h].factor, S.parts[pr.star].factor, S.parts[pr.h].code);
  }
  return reconstruct(S);
}

}  // namespace gqc::testing

#endif  // GQC_TESTS_SUPPORT_HPP
