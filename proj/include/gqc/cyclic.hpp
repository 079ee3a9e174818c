#ifndef GQC_CYCLIC_HPP
#define GQC_CYCLIC_HPP

// Quotient rings R_m = F[x]/(x^m - 1), primitive idempotents of minimal cyclic
// codes, and the maps identifying E = F[x]/(f) with the minimal ideal <I>.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "gqc/gf.hpp"
#include "gqc/polyring.hpp"

namespace gqc {

/// Element of F[x]/(x^m - 1) stored as its m coefficients.
class RingElem {
 public:
  RingElem() = default;
  RingElem(Field field, int m) : field_(std::move(field)), c_(check_m(m), 0) {}
  RingElem(Field field, int m, std::vector<Elem> coeffs) : field_(std::move(field)), c_(check_m(m), 0) {
    if (coeffs.size() > c_.size())
      throw std::invalid_argument("ring element has " + std::to_string(coeffs.size()) + " coefficients, block length " +
                                  std::to_string(m));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (!field_.contains(coeffs[i])) throw std::out_of_range("coefficient outside " + field_.name());
      c_[i] = coeffs[i];
    }
  }
  /// Reduction of a polynomial modulo x^m - 1.
  static RingElem from_poly(const Poly& p, int m) {
    RingElem r(p.field(), m);
    for (std::size_t i = 0; i < p.raw().size(); ++i) r.c_[i % m] = p.field().add(r.c_[i % m], p.raw()[i]);
    return r;
  }
  static RingElem one(const Field& f, int m) {
    RingElem r(f, m);
    r.c_[0] = 1;
    return r;
  }

  const Field& field() const { return field_; }
  int m() const { return static_cast<int>(c_.size()); }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem operator[](std::size_t i) const { return c_[i]; }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](Elem v) { return v == 0; });
  }
  Poly to_poly() const { return {field_, c_}; }

  /// Multiplication by x: cyclic shift of the coefficient vector.
  RingElem shifted() const {
    RingElem r(field_, m());
    for (int i = 0; i < m(); ++i) r.c_[(i + 1) % m()] = c_[i];
    return r;
  }
  RingElem scaled(Elem s) const {
    RingElem r(field_, m());
    for (int i = 0; i < m(); ++i) r.c_[i] = field_.mul(c_[i], s);
    return r;
  }

  friend RingElem operator+(const RingElem& a, const RingElem& b) {
    check_compatible(a, b);
    RingElem r(a.field_, a.m());
    for (int i = 0; i < a.m(); ++i) r.c_[i] = a.field_.add(a.c_[i], b.c_[i]);
    return r;
  }
  friend RingElem operator-(const RingElem& a, const RingElem& b) {
    check_compatible(a, b);
    RingElem r(a.field_, a.m());
    for (int i = 0; i < a.m(); ++i) r.c_[i] = a.field_.sub(a.c_[i], b.c_[i]);
    return r;
  }
  friend RingElem operator*(const RingElem& a, const RingElem& b) {
    check_compatible(a, b);
    const int m = a.m();
    RingElem r(a.field_, m);
    for (int i = 0; i < m; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j < m; ++j)
        if (b.c_[j] != 0) {
          const int k = (i + j) % m;
          r.c_[k] = a.field_.add(r.c_[k], a.field_.mul(a.c_[i], b.c_[j]));
        }
    }
    return r;
  }
  friend bool operator==(const RingElem& a, const RingElem& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

 private:
  static std::size_t check_m(int m) {
    if (m < 1) throw std::invalid_argument("block length must be positive");
    return static_cast<std::size_t>(m);
  }
  static void check_compatible(const RingElem& a, const RingElem& b) {
    require_same_field(a.field_, b.field_, "ring op");
    if (a.m() != b.m()) throw std::invalid_argument("ring elements from different block lengths");
  }

  Field field_;
  std::vector<Elem> c_;
};

/// An irreducible factor f together with E = F[x]/(f) and alpha = x mod f.
struct FactorField {
  Poly f;
  Field E;
  Elem alpha = 0;

  explicit FactorField(Poly factor)
      : f(factor.monic()), E(Field::unchecked_extension(f.field(), f.raw())), alpha(E.generator()) {}

  const Field& base() const { return f.field(); }
  int degree() const { return f.degree(); }
  bool divides_xm_minus_1(int m) const { return divides(f, Poly::xm_minus_one(base(), m)); }
};

inline void require_coprime_block(const Field& F, int m) {
  if (m < 1) throw std::invalid_argument("block length must be positive");
  if (!coprime(F.size(), static_cast<std::uint64_t>(m)))
    throw std::invalid_argument("CRT unavailable: block length " + std::to_string(m) + " not coprime to q=" +
                                std::to_string(F.size()));
}

/// theta with theta = 1 mod f and theta = 0 mod (x^m-1)/f; zero when f does
/// not divide x^m - 1.
inline RingElem primitive_idempotent(const Field& F, int m, const Poly& f) {
  require_coprime_block(F, m);
  require_same_field(F, f.field(), "primitive_idempotent");
  const Poly xm = Poly::xm_minus_one(F, m);
  const Poly fm = f.monic();
  auto [cof, rem] = divrem(xm, fm);
  if (!rem.is_zero()) return RingElem(F, m);
  const auto eg = ext_gcd(fm, cof);
  if (eg.g.degree() != 0) throw std::logic_error("x^m - 1 is not separable");
  return RingElem::from_poly((eg.v * cof) % xm, m);
}

/// psi(delta) = sum_k (1/m) Tr_{E/F}(delta * alpha^{-k}) x^k.
inline RingElem psi_map(const FactorField& ff, int m, Elem delta) {
  const Field& F = ff.base();
  const Field& E = ff.E;
  if (F.from_int(m) == 0) throw std::invalid_argument("trace normalization undefined: p divides block length");
  if (!ff.divides_xm_minus_1(m)) {
    if (delta != 0)
      throw std::invalid_argument("psi: " + ff.f.to_string() + " does not divide x^" + std::to_string(m) +
                                  "-1, only 0 maps");
    return RingElem(F, m);
  }
  const Elem inv_m = F.inv(F.from_int(m));
  const Elem alpha_inv = E.inv(ff.alpha);
  std::vector<Elem> c(m);
  Elem cur = delta;
  for (int k = 0; k < m; ++k) {
    c[k] = F.mul(inv_m, trace(E, cur, F));
    cur = E.mul(cur, alpha_inv);
  }
  return RingElem(F, m, std::move(c));
}

/// phi(a) = a(alpha) in E (zero when f does not divide x^m - 1).
inline Elem phi_map(const FactorField& ff, const RingElem& a) {
  require_same_field(ff.base(), a.field(), "phi_map");
  if (!ff.divides_xm_minus_1(a.m())) return 0;
  return detail::peval(ff.E, a.coeffs(), ff.alpha);
}

/// Union of the factors of x^{m_j} - 1 over all blocks, canonical order.
inline std::vector<Poly> global_factors(const Field& F, const std::vector<int>& blocks) {
  std::vector<Poly> all;
  for (int m : blocks) {
    require_coprime_block(F, m);
    for (const auto& f : factor_xm_minus_1(F, m).factors)
      if (std::find(all.begin(), all.end(), f) == all.end()) all.push_back(f);
  }
  std::sort(all.begin(), all.end(), [](const Poly& a, const Poly& b) { return canonical_less(a, b); });
  return all;
}

struct IdempotentTable {
  Field field;
  std::vector<int> blocks;
  std::vector<Poly> factors;                    // f_1..f_s
  std::vector<std::vector<bool>> support;       // support[i][j] = f_i | x^{m_j}-1
  std::vector<std::vector<RingElem>> idempotent;  // I_{i,j}

  std::size_t s() const { return factors.size(); }
};

inline IdempotentTable build_idempotent_table(const Field& F, const std::vector<int>& blocks) {
  IdempotentTable t{F, blocks, global_factors(F, blocks), {}, {}};
  for (const auto& f : t.factors) {
    std::vector<bool> sup;
    std::vector<RingElem> row;
    for (int m : blocks) {
      row.push_back(primitive_idempotent(F, m, f));
      sup.push_back(!row.back().is_zero());
    }
    t.support.push_back(std::move(sup));
    t.idempotent.push_back(std::move(row));
  }
  return t;
}

}  // namespace gqc

#endif  // GQC_CYCLIC_HPP
