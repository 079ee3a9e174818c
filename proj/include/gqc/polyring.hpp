#ifndef GQC_POLYRING_HPP
#define GQC_POLYRING_HPP

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gqc/detail/upoly.hpp"
#include "gqc/gf.hpp"

namespace gqc {

/// Dense univariate polynomial over a Field, ascending coefficients with
/// trailing zeros trimmed (the zero polynomial has no coefficients).
class Poly {
 public:
  Poly() = default;
  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (auto v : c_)
      if (!field_.contains(v)) throw std::out_of_range("coefficient outside " + field_.name());
    detail::trim(c_);
  }

  static Poly x(const Field& f) { return {f, {0, 1}}; }
  static Poly constant(const Field& f, Elem c) { return {f, {c}}; }
  static Poly xm_minus_one(const Field& f, int m) {
    std::vector<Elem> c(m + 1, 0);
    c[0] = f.neg(1);
    c[m] = 1;
    return {f, std::move(c)};
  }

  const Field& field() const { return field_; }
  std::span<const Elem> coeffs() const { return c_; }
  const std::vector<Elem>& raw() const { return c_; }
  int degree() const { return detail::deg(c_); }
  bool is_zero() const { return c_.empty(); }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Poly monic() const { return {field_, detail::pmonic(field_, c_)}; }

  /// Value at a point of this polynomial's field or of any extension on its tower.
  Elem eval_in(const Field& ext, Elem point) const {
    if (!ext.degree_over(field_)) throw std::domain_error(field_.name() + " is not a subfield of " + ext.name());
    return detail::peval(ext, c_, point);
  }
  Elem eval(Elem point) const { return detail::peval(field_, c_, point); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_, "poly add");
    return {a.field_, detail::padd(a.field_, a.c_, b.c_)};
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_, "poly sub");
    return {a.field_, detail::psub(a.field_, a.c_, b.c_)};
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_, "poly mul");
    return {a.field_, detail::pmul(a.field_, a.c_, b.c_)};
  }
  friend Poly operator%(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_, "poly mod");
    return {a.field_, detail::pmod(a.field_, a.c_, b.c_)};
  }
  Poly scaled(Elem s) const { return {field_, detail::pscale(field_, c_, s)}; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

  /// Canonical order: ascending degree, then lexicographic on ascending coefficients.
  friend bool canonical_less(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    return a.c_ < b.c_;
  }

  std::string to_string() const { return detail::coeffs_to_string(c_); }
  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

 private:
  Field field_;
  std::vector<Elem> c_;
};

inline std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field(), "poly divrem");
  auto [qt, r] = detail::pdivrem(a.field(), a.raw(), b.raw());
  return {Poly(a.field(), std::move(qt)), Poly(a.field(), std::move(r))};
}

inline bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

/// Monic gcd (zero if both inputs are zero).
inline Poly gcd(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field(), "poly gcd");
  return {a.field(), detail::pgcd(a.field(), a.raw(), b.raw())};
}

struct ExtGcd {
  Poly g, u, v;  // u*a + v*b = g, g monic
};

inline ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field(), "poly ext_gcd");
  const Field& F = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(F, 1), s1(F);
  Poly t0(F), t1 = Poly::constant(F, 1);
  while (!r1.is_zero()) {
    auto [qt, rem] = divrem(r0, r1);
    r0 = std::exchange(r1, rem);
    s0 = std::exchange(s1, s0 - qt * s1);
    t0 = std::exchange(t1, t0 - qt * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Elem li = F.inv(r0.lead());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

/// x^{deg f} f(1/x), made monic. Requires f(0) != 0.
inline Poly reciprocal(const Poly& f) {
  if (f.is_zero() || f.coeff(0) == 0)
    throw std::invalid_argument("reciprocal undefined for " + f.to_string() + ": zero constant term");
  std::vector<Elem> c(f.raw().rbegin(), f.raw().rend());
  return Poly(f.field(), std::move(c)).monic();
}

inline bool coprime(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b) == 1; }

/// q-cyclotomic cosets modulo m, each sorted, ordered by least representative.
inline std::vector<std::vector<int>> cyclotomic_cosets(std::uint64_t q, int m) {
  if (m < 1) throw std::invalid_argument("modulus m must be positive");
  if (!coprime(q, static_cast<std::uint64_t>(m)))
    throw std::invalid_argument("non-separable modulus: gcd(" + std::to_string(m) + ", " + std::to_string(q) +
                                ") != 1");
  std::vector<bool> seen(m, false);
  std::vector<std::vector<int>> out;
  const auto qm = static_cast<std::uint64_t>(q % m);
  for (int a = 0; a < m; ++a) {
    if (seen[a]) continue;
    std::vector<int> coset;
    std::uint64_t cur = a;
    while (!seen[cur]) {
      seen[cur] = true;
      coset.push_back(static_cast<int>(cur));
      cur = (cur * qm) % m;
    }
    std::sort(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  return out;
}

struct Factorization {
  Field field;
  int m = 0;
  std::vector<Poly> factors;               // canonical order
  std::vector<std::vector<int>> cosets;    // exponents of the order-m root, per factor
};

namespace detail {

inline Factorization compute_factorization(const Field& F, int m) {
  const std::uint64_t q = F.size();
  auto cosets = cyclotomic_cosets(q, m);
  int t = 1;
  for (const auto& c : cosets) t = std::lcm(t, static_cast<int>(c.size()));
  const Field S = t == 1 ? F : Field::unchecked_extension(F, find_irreducible(F, t));

  Elem beta = 1;
  if (m > 1) {
    const std::uint64_t cofactor = (S.size() - 1) / static_cast<std::uint64_t>(m);
    const auto primes = prime_factors(static_cast<std::uint64_t>(m));
    beta = 0;
    for (Elem cand = 1; cand < S.size() && beta == 0; ++cand) {
      const Elem b = S.pow(cand, cofactor);
      bool full = true;
      for (auto r : primes)
        if (S.pow(b, static_cast<std::uint64_t>(m) / r) == 1) full = false;
      if (full) beta = b;
    }
    if (beta == 0) throw std::logic_error("no element of order " + std::to_string(m) + " in " + S.name());
  }

  std::vector<std::pair<Poly, std::vector<int>>> items;
  for (auto& coset : cosets) {
    Coeffs acc{1};
    for (int a : coset) acc = pmul(S, acc, Coeffs{S.neg(S.pow(beta, a)), 1});
    for (auto c : acc)
      if (c >= q) throw std::logic_error("minimal polynomial coefficient outside the base field");
    items.emplace_back(Poly(F, std::move(acc)), std::move(coset));
  }
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });

  Factorization out{F, m, {}, {}};
  Poly prod = Poly::constant(F, 1);
  for (auto& [f, c] : items) {
    prod = prod * f;
    out.factors.push_back(std::move(f));
    out.cosets.push_back(std::move(c));
  }
  if (!(prod == Poly::xm_minus_one(F, m))) throw std::logic_error("factor product does not reconstruct x^m - 1");
  return out;
}

}  // namespace detail

/// Distinct monic irreducible factors of x^m - 1 over F (gcd(m, |F|) = 1).
inline Factorization factor_xm_minus_1(const Field& F, int m) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, Factorization> cache;
  if (m < 1) throw std::invalid_argument("modulus m must be positive");
  if (!coprime(F.size(), static_cast<std::uint64_t>(m)))
    throw std::invalid_argument("non-separable modulus: gcd(" + std::to_string(m) + ", " + std::to_string(F.size()) +
                                ") != 1");
  auto key = std::make_pair(F.name(), m);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto fact = detail::compute_factorization(F, m);
  std::lock_guard lock(mu);
  return cache.emplace(std::move(key), std::move(fact)).first->second;
}

struct ReciprocalClassification {
  std::vector<Poly> self_reciprocal;          // g_1..g_r
  std::vector<std::pair<Poly, Poly>> pairs;   // (h_t, h_t^*), h_t canonically smaller
};

inline ReciprocalClassification classify_reciprocal(std::span<const Poly> factors) {
  ReciprocalClassification out;
  std::vector<bool> used(factors.size(), false);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (used[i]) continue;
    const Poly r = reciprocal(factors[i]);
    if (r == factors[i].monic()) {
      used[i] = true;
      out.self_reciprocal.push_back(factors[i]);
      continue;
    }
    auto it = std::find(factors.begin(), factors.end(), r);
    if (it == factors.end())
      throw std::invalid_argument("reciprocal " + r.to_string() + " of " + factors[i].to_string() +
                                  " missing from the factor list");
    const auto j = static_cast<std::size_t>(it - factors.begin());
    if (used[j]) throw std::invalid_argument("factor list contains duplicates");
    used[i] = used[j] = true;
    if (canonical_less(factors[i], factors[j]))
      out.pairs.emplace_back(factors[i], factors[j]);
    else
      out.pairs.emplace_back(factors[j], factors[i]);
  }
  return out;
}

}  // namespace gqc

#endif  // GQC_POLYRING_HPP
