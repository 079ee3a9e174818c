#ifndef GQC_GQC_HPP
#define GQC_GQC_HPP

// Generalized quasi-cyclic codes: F[x]-submodules of R_0 x ... x R_{l-1} with
// R_j = F[x]/(x^{m_j} - 1). Three presentations are supported and can be
// converted into each other: module generators, the CRT constituents over the
// fields E_i = F[x]/(f_i), and the (multilevel) concatenation of those
// constituents with the minimal ideals <I_i>.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "gqc/cyclic.hpp"
#include "gqc/lincode.hpp"

namespace gqc {

/// One module generator: a ring element per block.
using GenTuple = std::vector<RingElem>;

class GqcCode {
 public:
  GqcCode() = default;
  GqcCode(Field field, std::vector<int> blocks) : field_(std::move(field)), blocks_(std::move(blocks)) {
    for (int m : blocks_)
      if (m < 1) throw std::invalid_argument("block lengths must be positive");
  }
  GqcCode(Field field, std::vector<int> blocks, std::vector<GenTuple> gens)
      : GqcCode(std::move(field), std::move(blocks)) {
    for (auto& g : gens) add_generator(std::move(g));
  }

  /// Generators given as ascending coefficient lists per block.
  static GqcCode from_coeffs(const Field& f, std::vector<int> blocks,
                             const std::vector<std::vector<std::vector<Elem>>>& gens) {
    GqcCode c(f, std::move(blocks));
    for (const auto& g : gens) {
      if (g.size() != c.ell())
        throw std::invalid_argument("generator arity " + std::to_string(g.size()) + " != block count " +
                                    std::to_string(c.ell()));
      GenTuple t;
      for (std::size_t j = 0; j < g.size(); ++j) t.emplace_back(f, c.blocks_[j], g[j]);
      c.add_generator(std::move(t));
    }
    return c;
  }

  void add_generator(GenTuple g) {
    if (g.size() != blocks_.size())
      throw std::invalid_argument("generator arity " + std::to_string(g.size()) + " != block count " +
                                  std::to_string(blocks_.size()));
    for (std::size_t j = 0; j < g.size(); ++j) {
      require_same_field(field_, g[j].field(), "GQC generator");
      if (g[j].m() != blocks_[j]) throw std::invalid_argument("generator component has the wrong block length");
    }
    gens_.push_back(std::move(g));
  }

  const Field& field() const { return field_; }
  const std::vector<int>& blocks() const { return blocks_; }
  const std::vector<GenTuple>& generators() const { return gens_; }
  std::size_t ell() const { return blocks_.size(); }
  std::size_t length() const { return static_cast<std::size_t>(std::accumulate(blocks_.begin(), blocks_.end(), 0)); }

 private:
  Field field_;
  std::vector<int> blocks_;
  std::vector<GenTuple> gens_;
};

inline Vec flatten(const GenTuple& t) {
  Vec out;
  for (const auto& r : t) out.insert(out.end(), r.coeffs().begin(), r.coeffs().end());
  return out;
}

inline GenTuple unflatten(const Field& F, const std::vector<int>& blocks, const Vec& v) {
  GenTuple t;
  std::size_t off = 0;
  for (int m : blocks) {
    if (off + static_cast<std::size_t>(m) > v.size()) throw std::invalid_argument("vector shorter than the blocks");
    t.emplace_back(F, m, Vec(v.begin() + static_cast<std::ptrdiff_t>(off), v.begin() + static_cast<std::ptrdiff_t>(off + m)));
    off += static_cast<std::size_t>(m);
  }
  if (off != v.size()) throw std::invalid_argument("block lengths do not partition the vector");
  return t;
}

/// Simultaneous cyclic shift of every block (multiplication by x).
inline Vec block_shift(const Vec& v, const std::vector<int>& blocks) {
  Vec out(v.size());
  std::size_t off = 0;
  for (int m : blocks) {
    for (int k = 0; k < m; ++k) out[off + static_cast<std::size_t>((k + 1) % m)] = v[off + static_cast<std::size_t>(k)];
    off += static_cast<std::size_t>(m);
  }
  return out;
}

/// F_q-span of the module: for each generator, its shifts up to the first one
/// already spanned by the earlier shifts (every later shift is then spanned too).
inline LinearCode to_linear(const GqcCode& C) {
  LinearCode L(C.field(), C.length());
  for (const auto& g : C.generators()) {
    LinearCode orbit(C.field(), C.length());
    Vec cur = flatten(g);
    while (orbit.insert(cur)) cur = block_shift(cur, C.blocks());
    for (const auto& r : orbit.basis()) L.insert(r);
  }
  return L;
}

/// True iff the code is closed under the per-block cyclic shift.
inline bool is_gqc(const LinearCode& L, const std::vector<int>& blocks) {
  const auto total = std::accumulate(blocks.begin(), blocks.end(), std::size_t{0},
                                     [](std::size_t a, int m) { return a + static_cast<std::size_t>(m); });
  if (total != L.length())
    throw std::invalid_argument("block partition sums to " + std::to_string(total) + ", code length " +
                                std::to_string(L.length()));
  for (const auto& r : L.basis())
    if (!L.contains(block_shift(r, blocks))) return false;
  return true;
}

/// GQC code whose generators are the RREF rows of a shift-closed linear code.
inline GqcCode from_linear(const LinearCode& L, const std::vector<int>& blocks) {
  if (!is_gqc(L, blocks)) throw std::invalid_argument("linear code is not closed under the block shift");
  GqcCode C(L.field(), blocks);
  for (const auto& r : L.basis()) C.add_generator(unflatten(L.field(), blocks, r));
  return C;
}

struct Constituent {
  FactorField factor;
  std::vector<bool> support;  // v_{i,j}
  LinearCode code;            // E_i-linear, length l, zero outside support

  std::size_t fq_dimension() const { return static_cast<std::size_t>(factor.degree()) * code.dimension(); }
  std::vector<std::size_t> supported_coords() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < support.size(); ++j)
      if (support[j]) out.push_back(j);
    return out;
  }
};

struct ConstituentSet {
  Field field;
  std::vector<int> blocks;
  std::vector<Constituent> parts;  // one per global factor, canonical order

  std::size_t fq_dimension() const {
    std::size_t d = 0;
    for (const auto& p : parts) d += p.fq_dimension();
    return d;
  }
};

/// Constituent slots for the given blocks with every constituent zero.
inline ConstituentSet constituent_frame(const Field& F, const std::vector<int>& blocks) {
  ConstituentSet S{F, blocks, {}};
  for (auto& f : global_factors(F, blocks)) {
    FactorField ff(f);
    std::vector<bool> sup;
    for (int m : blocks) sup.push_back(ff.divides_xm_minus_1(m));
    LinearCode zero(ff.E, blocks.size());
    S.parts.push_back({std::move(ff), std::move(sup), std::move(zero)});
  }
  return S;
}

/// CRT decomposition: constituent i is the E_i-span of the generators
/// evaluated at alpha_i blockwise (zero where f_i does not divide x^{m_j}-1).
inline ConstituentSet decompose(const GqcCode& C) {
  ConstituentSet S = constituent_frame(C.field(), C.blocks());
  for (auto& part : S.parts) {
    const Field& E = part.factor.E;
    for (const auto& g : C.generators()) {
      Vec v(C.ell(), 0);
      for (std::size_t j = 0; j < C.ell(); ++j)
        if (part.support[j]) v[j] = detail::peval(E, g[j].coeffs(), part.factor.alpha);
      part.code.insert(std::move(v));
    }
  }
  return S;
}

inline void validate(const ConstituentSet& S) {
  if (S.parts.empty() && !S.blocks.empty()) throw std::invalid_argument("constituent set has no parts");
  const auto expect = constituent_frame(S.field, S.blocks);
  if (expect.parts.size() != S.parts.size())
    throw std::invalid_argument("constituent count does not match the factors of the blocks");
  for (std::size_t i = 0; i < S.parts.size(); ++i) {
    const auto& part = S.parts[i];
    if (!(part.factor.f == expect.parts[i].factor.f) || part.support != expect.parts[i].support)
      throw std::invalid_argument("support mask inconsistent with block lengths for factor " +
                                  part.factor.f.to_string());
    require_same_field(part.factor.E, part.code.field(), "constituent");
    if (part.code.length() != S.blocks.size()) throw std::invalid_argument("constituent length != block count");
    for (const auto& row : part.code.basis())
      for (std::size_t j = 0; j < row.size(); ++j)
        if (!part.support[j] && row[j] != 0)
          throw std::invalid_argument("constituent for " + part.factor.f.to_string() +
                                      " is nonzero on unsupported block " + std::to_string(j));
  }
}

/// Concatenation map Psi_i: one outer codeword of constituent i to a word of R'.
inline GenTuple concatenate(const ConstituentSet& S, std::size_t i, const Vec& c) {
  const auto& part = S.parts.at(i);
  GenTuple t;
  for (std::size_t j = 0; j < S.blocks.size(); ++j) t.push_back(psi_map(part.factor, S.blocks[j], c.at(j)));
  return t;
}

/// Direct sum of the concatenations <I_i> [] C_i, as module generators.
inline GqcCode reconstruct(const ConstituentSet& S) {
  validate(S);
  GqcCode C(S.field, S.blocks);
  for (std::size_t i = 0; i < S.parts.size(); ++i)
    for (const auto& row : S.parts[i].code.basis()) C.add_generator(concatenate(S, i, row));
  return C;
}

/// Trace representation: block j, position k carries
/// (1/m_j) sum_i Tr_{E_i/F}(lambda_{i,j} alpha_i^{-k}).
inline Vec trace_codeword(const ConstituentSet& S, const std::vector<Vec>& lambdas) {
  if (lambdas.size() != S.parts.size()) throw std::invalid_argument("need one codeword per constituent");
  const Field& F = S.field;
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    if (!S.parts[i].code.contains(lambdas[i]))
      throw std::invalid_argument("lambda_" + std::to_string(i + 1) + " is not a codeword of constituent " +
                                  std::to_string(i + 1));
  Vec out;
  for (std::size_t j = 0; j < S.blocks.size(); ++j) {
    const int m = S.blocks[j];
    const Elem inv_m = F.inv(F.from_int(m));
    Vec col(static_cast<std::size_t>(m), 0);
    for (std::size_t i = 0; i < S.parts.size(); ++i) {
      const auto& ff = S.parts[i].factor;
      const Elem lam = lambdas[i][j];
      if (lam == 0) continue;
      for (int k = 0; k < m; ++k) {
        const Elem a = ff.E.pow(ff.E.inv(ff.alpha), static_cast<std::uint64_t>(k));
        col[static_cast<std::size_t>(k)] = F.add(col[static_cast<std::size_t>(k)], trace(ff.E, ff.E.mul(lam, a), F));
      }
    }
    for (auto& e : col) e = F.mul(e, inv_m);
    out.insert(out.end(), col.begin(), col.end());
  }
  return out;
}

/// Span of trace codewords over an F-spanning family of inputs: each
/// constituent basis row times alpha_i^t, all other constituents zero.
inline LinearCode trace_span(const ConstituentSet& S) {
  const auto n = static_cast<std::size_t>(std::accumulate(S.blocks.begin(), S.blocks.end(), 0));
  LinearCode L(S.field, n);
  std::vector<Vec> lambdas(S.parts.size(), Vec(S.blocks.size(), 0));
  for (std::size_t i = 0; i < S.parts.size(); ++i) {
    const auto& ff = S.parts[i].factor;
    for (const auto& row : S.parts[i].code.basis()) {
      Elem scal = 1;
      for (int t = 0; t < ff.degree(); ++t) {
        Vec lam(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) lam[j] = ff.E.mul(scal, row[j]);
        lambdas[i] = lam;
        L.insert(trace_codeword(S, lambdas));
        scal = ff.E.mul(scal, ff.alpha);
      }
    }
    lambdas[i] = Vec(S.blocks.size(), 0);
  }
  return L;
}

/// psi(B): the stacked outer code B (row i from constituent i) mapped column
/// by column through psi_j(a_1, ..., a_s) = sum_i psi_{i,j}(a_i).
inline LinearCode multilevel_image(const ConstituentSet& S) {
  validate(S);
  const auto n = static_cast<std::size_t>(std::accumulate(S.blocks.begin(), S.blocks.end(), 0));
  LinearCode L(S.field, n);
  const std::size_t s = S.parts.size(), ell = S.blocks.size();
  auto psi_column = [&](std::size_t j, const std::vector<Elem>& column) {
    RingElem acc(S.field, S.blocks[j]);
    for (std::size_t i = 0; i < s; ++i)
      if (column[i] != 0) acc = acc + psi_map(S.parts[i].factor, S.blocks[j], column[i]);
    return acc;
  };
  // F-basis of B: E_i-basis rows of C_i scaled by alpha_i^t, one row of B at a time.
  for (std::size_t i = 0; i < s; ++i) {
    const auto& ff = S.parts[i].factor;
    for (const auto& row : S.parts[i].code.basis()) {
      Elem scal = 1;
      for (int t = 0; t < ff.degree(); ++t) {
        std::vector<std::vector<Elem>> b(s, std::vector<Elem>(ell, 0));
        for (std::size_t j = 0; j < ell; ++j) b[i][j] = ff.E.mul(scal, row[j]);
        Vec word;
        for (std::size_t j = 0; j < ell; ++j) {
          std::vector<Elem> column(s);
          for (std::size_t u = 0; u < s; ++u) column[u] = b[u][j];
          const auto r = psi_column(j, column);
          word.insert(word.end(), r.coeffs().begin(), r.coeffs().end());
        }
        L.insert(std::move(word));
        scal = ff.E.mul(scal, ff.alpha);
      }
    }
  }
  return L;
}

}  // namespace gqc

#endif  // GQC_GQC_HPP
