#ifndef GQC_DUALITY_HPP
#define GQC_DUALITY_HPP

// Duals of GQC codes through their constituents, and self-dual / LCD verdicts.
// Every verdict is also computed directly on the expanded F_q-linear code.
//
// For c, d in R_j the Euclidean product is sum_i (1/m_j) Tr(c(alpha_i) d(alpha_i^{-1})).
// On a self-reciprocal factor d(alpha^{-1}) is the Hermitian conjugate of
// d(alpha); on a reciprocal pair (h, h*) it is the image of the h* component
// under iota: H'' -> H', alpha'' -> alpha'^{-1}. The block weights 1/m_j
// survive into the dual constituents as the diagonal factor diag(m_j).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gqc/gqc.hpp"

namespace gqc {

struct ReciprocalPairIndex {
  std::size_t h;     // constituent index of h_t   (C'_t)
  std::size_t star;  // constituent index of h_t^* (C''_t)
};

struct DualityProfile {
  std::vector<std::size_t> self_reciprocal;  // constituent indices of g_1..g_r
  std::vector<ReciprocalPairIndex> pairs;
};

inline DualityProfile duality_profile(const ConstituentSet& S) {
  std::vector<Poly> fs;
  for (const auto& p : S.parts) fs.push_back(p.factor.f);
  const auto cls = classify_reciprocal(fs);
  auto index_of = [&](const Poly& f) {
    for (std::size_t i = 0; i < fs.size(); ++i)
      if (fs[i] == f) return i;
    throw std::logic_error("factor missing from constituent set");
  };
  DualityProfile prof;
  for (const auto& g : cls.self_reciprocal) prof.self_reciprocal.push_back(index_of(g));
  for (const auto& [h, hs] : cls.pairs) {
    const auto a = index_of(h), b = index_of(hs);
    if (S.parts[a].support != S.parts[b].support)
      throw std::logic_error("reciprocal factors with different support masks");
    prof.pairs.push_back({a, b});
  }
  return prof;
}

namespace detail {

inline LinearCode map_code(const LinearCode& L, const Field& to, const auto& fn) {
  LinearCode out(to, L.length());
  for (const auto& row : L.basis()) {
    Vec v(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) v[j] = fn(row[j]);
    out.insert(std::move(v));
  }
  return out;
}

// m_j as elements of E, on the supported coordinates only.
inline Vec block_weights(const Constituent& c, const std::vector<int>& blocks) {
  Vec w;
  for (auto j : c.supported_coords()) w.push_back(c.factor.base().from_int(blocks[j]));
  return w;
}

// diag(m_j) * (C restricted to its support)^{perp form}, embedded back.
inline LinearCode weighted_dual(const Constituent& c, const LinearCode& code, const std::vector<int>& blocks,
                                Form form) {
  const auto coords = c.supported_coords();
  if (coords.empty()) return LinearCode(code.field(), code.length());
  return code.restricted(coords).dual(form).scaled(block_weights(c, blocks)).embedded(code.length(), coords);
}

}  // namespace detail

/// iota: H'' -> H' with alpha'' -> alpha'^{-1}.
inline LinearCode iota(const FactorField& h, const FactorField& star, const LinearCode& L) {
  const Elem image = h.E.inv(h.alpha);
  return detail::map_code(L, h.E, [&](Elem e) { return map_by_generator(star.E, e, h.E, image); });
}

/// iota^{-1}: H' -> H'' with alpha' -> alpha''^{-1}.
inline LinearCode iota_inverse(const FactorField& h, const FactorField& star, const LinearCode& L) {
  const Elem image = star.E.inv(star.alpha);
  return detail::map_code(L, star.E, [&](Elem e) { return map_by_generator(h.E, e, star.E, image); });
}

/// Constituents of C^perp computed from those of C.
inline ConstituentSet dual_constituents(const ConstituentSet& S) {
  validate(S);
  const auto prof = duality_profile(S);
  ConstituentSet D = S;
  for (auto i : prof.self_reciprocal)
    D.parts[i].code = detail::weighted_dual(S.parts[i], S.parts[i].code, S.blocks, Form::hermitian);
  for (const auto& [a, b] : prof.pairs) {
    const auto& h = S.parts[a];
    const auto& hs = S.parts[b];
    const LinearCode c2 = iota(h.factor, hs.factor, hs.code);
    D.parts[a].code = detail::weighted_dual(h, c2, S.blocks, Form::euclidean);
    const LinearCode d2 = detail::weighted_dual(h, h.code, S.blocks, Form::euclidean);
    D.parts[b].code = iota_inverse(h.factor, hs.factor, d2);
  }
  return D;
}

/// Euclidean dual of a GQC code through its constituents (coprime blocks only).
inline GqcCode dual_gqc(const GqcCode& C) { return reconstruct(dual_constituents(decompose(C))); }

/// Euclidean dual by plain linear algebra; works for any blocks.
inline GqcCode dual_direct(const GqcCode& C) { return from_linear(to_linear(C).dual(), C.blocks()); }

inline bool crt_available(const Field& F, const std::vector<int>& blocks) {
  for (int m : blocks)
    if (m < 1 || !coprime(F.size(), static_cast<std::uint64_t>(m))) return false;
  return true;
}

struct Verdict {
  bool value = false;                // the direct linear-algebra answer
  bool direct = false;
  std::optional<bool> constituent;   // unset when CRT does not apply
  std::vector<std::string> evidence; // constituents that fail their criterion

  bool routes_agree() const { return !constituent || *constituent == direct; }
  std::string method() const { return constituent ? "constituent+direct" : "direct"; }
};

namespace detail {

inline std::string factor_label(const Constituent& c, std::size_t i) {
  return "constituent " + std::to_string(i + 1) + " (" + c.factor.f.to_string() + ")";
}

template <class Check>
Verdict verdict(const GqcCode& C, bool direct, Check&& check) {
  Verdict v;
  v.direct = direct;
  v.value = direct;
  if (crt_available(C.field(), C.blocks())) {
    const auto S = decompose(C);
    const auto D = dual_constituents(S);
    const auto prof = duality_profile(S);
    bool ok = true;
    for (auto i : prof.self_reciprocal)
      if (!check(S.parts[i].code, D.parts[i].code)) {
        ok = false;
        v.evidence.push_back(factor_label(S.parts[i], i) + ": weighted Hermitian criterion fails");
      }
    for (const auto& [a, b] : prof.pairs)
      for (auto i : {a, b})
        if (!check(S.parts[i].code, D.parts[i].code)) {
          ok = false;
          v.evidence.push_back(factor_label(S.parts[i], i) + ": weighted Euclidean pair criterion fails");
        }
    v.constituent = ok;
  }
  return v;
}

}  // namespace detail

inline Verdict is_self_dual(const GqcCode& C) {
  const LinearCode L = to_linear(C);
  return detail::verdict(C, L == L.dual(), [](const LinearCode& c, const LinearCode& d) { return c == d; });
}

inline Verdict is_lcd(const GqcCode& C) {
  const LinearCode L = to_linear(C);
  return detail::verdict(C, L.intersect(L.dual()).is_zero(),
                         [](const LinearCode& c, const LinearCode& d) { return c.intersect(d).is_zero(); });
}

}  // namespace gqc

#endif  // GQC_DUALITY_HPP
