#ifndef GQC_GF_HPP
#define GQC_GF_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gqc/detail/upoly.hpp"
#include "gqc/field.hpp"

namespace gqc {

/// Searches for a nontrivial factor of `f` over `base`: a linear factor from an
/// exhaustive root search, otherwise gcd(f, x^{q^k} - x) for k <= deg f / 2.
/// Returns nothing iff `f` is irreducible.
inline std::optional<std::vector<Elem>> find_factor(const Field& base, std::vector<Elem> f) {
  detail::trim(f);
  const int d = detail::deg(f);
  if (d <= 1) return std::nullopt;
  if (base.size() <= detail::kTableLimit) {
    for (Elem r = 0; r < base.size(); ++r)
      if (detail::peval(base, f, r) == 0) return std::vector<Elem>{base.neg(r), 1};
  }
  const detail::Coeffs x{0, 1};
  detail::Coeffs frob = detail::pmod(base, x, f);
  for (int k = 1; k <= d / 2; ++k) {
    frob = detail::ppowmod(base, frob, base.size(), f);
    auto g = detail::pgcd(base, detail::psub(base, frob, x), f);
    if (detail::deg(g) >= 1) return g;
  }
  return std::nullopt;
}

inline bool is_irreducible(const Field& base, const std::vector<Elem>& f) {
  auto t = f;
  detail::trim(t);
  return detail::deg(t) >= 1 && !find_factor(base, t);
}

/// base[x]/(modulus), after checking the modulus is monic and irreducible.
inline Field make_extension(const Field& base, std::vector<Elem> modulus) {
  detail::trim(modulus);
  if (detail::deg(modulus) < 1) throw std::invalid_argument("extension modulus must have degree >= 1");
  if (modulus.back() != 1)
    throw std::invalid_argument("extension modulus " + detail::coeffs_to_string(modulus) + " is not monic");
  if (auto factor = find_factor(base, modulus))
    throw std::invalid_argument("extension modulus " + detail::coeffs_to_string(modulus) + " over " + base.name() +
                                " is reducible: divisible by " + detail::coeffs_to_string(*factor));
  return Field::unchecked_extension(base, std::move(modulus));
}

/// First monic irreducible of the given degree in lexicographic order of the
/// lower coefficients (ascending-degree digits, constant term varying fastest).
inline std::vector<Elem> find_irreducible(const Field& base, int degree) {
  if (degree < 1) throw std::invalid_argument("irreducible degree must be >= 1");
  std::vector<Elem> f(degree + 1, 0);
  f[degree] = 1;
  if (degree == 1) return f;
  while (true) {
    int i = 0;
    while (i < degree) {
      if (++f[i] < base.size()) break;
      f[i] = 0;
      ++i;
    }
    if (i == degree) throw std::logic_error("no irreducible polynomial found");
    if (f[0] != 0 && is_irreducible(base, f)) return f;
  }
}

/// Tr_{F/sub}(e) = e + e^Q + ... + e^{Q^{d-1}}, Q = |sub|, d = [F : sub].
inline Elem trace(const Field& F, Elem e, const Field& sub) {
  auto d = F.degree_over(sub);
  if (!d) throw std::domain_error(sub.name() + " is not on the tower of " + F.name());
  Elem acc = 0, cur = e;
  for (int i = 0; i < *d; ++i) {
    acc = F.add(acc, cur);
    cur = F.pow(cur, sub.size());
  }
  if (acc >= sub.size()) throw std::logic_error("trace left the subfield");
  return acc;
}

/// Exponent of the Hermitian conjugation on F relative to its designated base:
/// sqrt(|F|) for an even-degree extension, 1 (identity) for prime fields and
/// degree-1 extensions, nothing otherwise.
inline std::optional<std::uint64_t> conjugation_exponent(const Field& F) {
  if (F.is_prime_field() || F.degree() == 1) return 1;
  if (F.degree() % 2 != 0) return std::nullopt;
  std::uint64_t e = 1;
  for (int i = 0; i < F.degree() / 2; ++i) e *= F.base().size();
  return e;
}

inline Elem hermitian_conj(const Field& F, Elem e) {
  auto ex = conjugation_exponent(F);
  if (!ex)
    throw std::domain_error("Hermitian conjugation undefined on " + F.name() + " (odd degree " +
                            std::to_string(F.degree()) + " over its base)");
  return *ex == 1 ? e : F.pow(e, *ex);
}

/// Image of `e` under the homomorphism from -> to that fixes from.base() and
/// sends the generator of `from` to `image`.
inline Elem map_by_generator(const Field& from, Elem e, const Field& to, Elem image) {
  const Field base = from.base();
  if (!to.degree_over(base)) throw std::domain_error(base.name() + " is not a subfield of " + to.name());
  std::vector<Elem> digits(from.degree());
  for (int k = 0; k < from.degree(); ++k) {
    digits[k] = e % base.size();
    e /= base.size();
  }
  if (from.degree() == 1) return digits[0];
  detail::trim(digits);
  return detail::peval(to, digits, image);
}

/// An element together with its field; arithmetic refuses to mix fields.
class FieldElement {
 public:
  FieldElement(Field field, Elem code) : field_(std::move(field)), code_(code) {
    if (!field_.contains(code_)) throw std::out_of_range("element code outside " + field_.name());
  }

  const Field& field() const { return field_; }
  Elem code() const { return code_; }
  bool is_zero() const { return code_ == 0; }

  /// Coordinates over the immediate base, ascending powers of the generator.
  std::vector<Elem> coefficients() const {
    if (field_.is_prime_field()) return {code_};
    std::vector<Elem> out(field_.degree());
    Elem c = code_;
    for (auto& v : out) {
      v = c % field_.base().size();
      c /= field_.base().size();
    }
    return out;
  }

  FieldElement inv() const { return {field_, field_.inv(code_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_.pow(code_, e)}; }
  FieldElement operator-() const { return {field_, field_.neg(code_)}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_, "add");
    return {a.field_, a.field_.add(a.code_, b.code_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_, "sub");
    return {a.field_, a.field_.sub(a.code_, b.code_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_, "mul");
    return {a.field_, a.field_.mul(a.code_, b.code_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_, "div");
    return {a.field_, a.field_.div(a.code_, b.code_)};
  }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.code_ == b.code_;
  }
  friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.code_; }

 private:
  Field field_;
  Elem code_;
};

inline FieldElement trace_to_base(const FieldElement& e, const Field& sub) {
  return {sub, trace(e.field(), e.code(), sub)};
}

inline FieldElement hermitian_conj(const FieldElement& e) { return {e.field(), hermitian_conj(e.field(), e.code())}; }

inline FieldElement generator_of(const Field& F) { return {F, F.generator()}; }

}  // namespace gqc

#endif  // GQC_GF_HPP
