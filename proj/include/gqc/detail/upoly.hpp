#ifndef GQC_DETAIL_UPOLY_HPP
#define GQC_DETAIL_UPOLY_HPP

// Dense univariate polynomial kernel on raw coefficient vectors (ascending
// degree, trailing zeros trimmed). Shared by field construction and Poly.

#include <cstdint>
#include <utility>
#include <vector>

#include "gqc/field.hpp"

namespace gqc::detail {

using Coeffs = std::vector<Elem>;

inline void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

inline Coeffs padd(const Field& F, const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Elem x = i < a.size() ? a[i] : 0;
    const Elem y = i < b.size() ? b[i] : 0;
    r[i] = F.add(x, y);
  }
  trim(r);
  return r;
}

inline Coeffs psub(const Field& F, const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Elem x = i < a.size() ? a[i] : 0;
    const Elem y = i < b.size() ? b[i] : 0;
    r[i] = F.sub(x, y);
  }
  trim(r);
  return r;
}

inline Coeffs pscale(const Field& F, const Coeffs& a, Elem c) {
  if (c == 0) return {};
  Coeffs r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  trim(r);
  return r;
}

inline Coeffs pmul(const Field& F, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

/// Quotient and remainder; `b` must be nonzero.
inline std::pair<Coeffs, Coeffs> pdivrem(const Field& F, const Coeffs& a, const Coeffs& b) {
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  Coeffs r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  const Elem lead_inv = F.inv(b.back());
  const std::size_t db = b.size() - 1;
  Coeffs quot(r.size() - db, 0);
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    const Elem c = F.mul(r[i], lead_inv);
    quot[i - db] = c;
    for (std::size_t k = 0; k <= db; ++k)
      if (b[k] != 0) r[i - db + k] = F.sub(r[i - db + k], F.mul(c, b[k]));
  }
  trim(r);
  trim(quot);
  return {quot, r};
}

inline Coeffs pmod(const Field& F, const Coeffs& a, const Coeffs& b) { return pdivrem(F, a, b).second; }

inline Coeffs pmonic(const Field& F, const Coeffs& a) {
  if (a.empty()) return a;
  return pscale(F, a, F.inv(a.back()));
}

inline Coeffs pgcd(const Field& F, Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = pmod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(F, a);
}

inline Coeffs pmulmod(const Field& F, const Coeffs& a, const Coeffs& b, const Coeffs& m) {
  return pmod(F, pmul(F, a, b), m);
}

inline Coeffs ppowmod(const Field& F, Coeffs base, std::uint64_t e, const Coeffs& m) {
  Coeffs r{1};
  r = pmod(F, r, m);
  base = pmod(F, base, m);
  while (e) {
    if (e & 1) r = pmulmod(F, r, base, m);
    e >>= 1;
    if (e) base = pmulmod(F, base, base, m);
  }
  return r;
}

/// Horner evaluation of a polynomial whose coefficients live in a subfield of
/// `E` (codes embed unchanged) at the point `x` of `E`.
inline Elem peval(const Field& E, const Coeffs& a, Elem x) {
  Elem r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = E.add(E.mul(r, x), a[i]);
  return r;
}

}  // namespace gqc::detail

#endif  // GQC_DETAIL_UPOLY_HPP
