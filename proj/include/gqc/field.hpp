#ifndef GQC_FIELD_HPP
#define GQC_FIELD_HPP

// Runtime finite fields: prime fields F_p and towers of simple extensions
// B[x]/(f). Elements are plain integer codes. An element of an extension of
// degree d over B is sum_{k<d} c_k * |B|^k where c_k is the code of a base
// coefficient, so every subfield on the tower embeds with unchanged codes and
// the base-p digits of a code are its coordinates over F_p.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gqc/errors.hpp"

namespace gqc {

using Elem = std::uint64_t;

namespace detail {

inline constexpr int kMaxExtensionDegree = 64;
inline constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

struct FieldData {
  std::uint64_t p = 0;
  std::uint64_t q = 0;  // cardinality
  int degree = 1;       // over base; 1 for prime fields
  std::shared_ptr<const FieldData> base;
  std::vector<Elem> modulus;  // ascending, monic; empty for prime fields
  std::vector<std::uint32_t> exp_table, log_table;
  std::string name;

  bool is_prime() const { return base == nullptr; }

  Elem add(Elem a, Elem b) const {
    if (p == 2) return a ^ b;
    if (is_prime()) {
      Elem s = a + b;
      return s >= p ? s - p : s;
    }
    Elem r = 0, pw = 1;
    while (a | b) {
      Elem s = a % p + b % p;
      if (s >= p) s -= p;
      r += s * pw;
      pw *= p;
      a /= p;
      b /= p;
    }
    return r;
  }

  Elem neg(Elem a) const {
    if (p == 2) return a;
    if (is_prime()) return a == 0 ? 0 : p - a;
    Elem r = 0, pw = 1;
    while (a) {
      Elem dgt = a % p;
      r += (dgt ? p - dgt : 0) * pw;
      pw *= p;
      a /= p;
    }
    return r;
  }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (is_prime()) return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p);
    if (!exp_table.empty()) {
      std::uint64_t e = std::uint64_t{log_table[a]} + log_table[b];
      if (e >= q - 1) e -= q - 1;
      return exp_table[e];
    }
    return mul_generic(a, b);
  }

  Elem mul_generic(Elem a, Elem b) const {
    const std::uint64_t bq = base->q;
    std::array<Elem, kMaxExtensionDegree> ca{}, cb{};
    std::array<Elem, 2 * kMaxExtensionDegree> prod{};
    for (int k = 0; k < degree; ++k) {
      ca[k] = a % bq;
      a /= bq;
      cb[k] = b % bq;
      b /= bq;
    }
    for (int i = 0; i < degree; ++i) {
      if (ca[i] == 0) continue;
      for (int j = 0; j < degree; ++j)
        if (cb[j] != 0) prod[i + j] = base->add(prod[i + j], base->mul(ca[i], cb[j]));
    }
    for (int i = 2 * degree - 2; i >= degree; --i) {
      const Elem c = prod[i];
      if (c == 0) continue;
      const Elem nc = base->neg(c);
      for (int k = 0; k < degree; ++k)
        if (modulus[k] != 0) prod[i - degree + k] = base->add(prod[i - degree + k], base->mul(nc, modulus[k]));
      prod[i] = 0;
    }
    Elem r = 0;
    for (int k = degree - 1; k >= 0; --k) r = r * bq + prod[k];
    return r;
  }

  Elem pow(Elem a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    e %= (q - 1);
    if (!exp_table.empty()) {
      auto idx = static_cast<std::uint64_t>((static_cast<unsigned __int128>(log_table[a]) * e) % (q - 1));
      return exp_table[idx];
    }
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  Elem inv(Elem a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in " + name);
    if (!exp_table.empty()) return exp_table[(q - 1 - log_table[a]) % (q - 1)];
    return pow(a, q - 2);
  }

  void build_tables() {
    if (is_prime() || q > kTableLimit) return;
    const auto factors = prime_factors(q - 1);
    Elem g = 1;
    for (Elem cand = 1; cand < q; ++cand) {
      bool primitive = true;
      for (auto r : factors) {
        if (pow(cand, (q - 1) / r) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        g = cand;
        break;
      }
    }
    std::vector<std::uint32_t> ex(q - 1), lg(q, 0);
    Elem cur = 1;
    for (std::uint64_t i = 0; i + 1 < q; ++i) {
      ex[i] = static_cast<std::uint32_t>(cur);
      lg[cur] = static_cast<std::uint32_t>(i);
      cur = mul_generic(cur, g);
    }
    exp_table = std::move(ex);
    log_table = std::move(lg);
  }
};

inline std::string coeffs_to_string(std::span<const Elem> c) {
  std::string s;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (c[i] != 1 || i == 0) s += std::to_string(c[i]);
    if (i >= 1) {
      if (c[i] != 1) s += "*";
      s += "x";
      if (i >= 2) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

struct FieldRegistry {
  std::mutex mu;
  std::map<std::uint64_t, std::shared_ptr<const FieldData>> primes;
  std::map<std::pair<const FieldData*, std::vector<Elem>>, std::shared_ptr<const FieldData>> extensions;

  static FieldRegistry& instance() {
    static FieldRegistry reg;
    return reg;
  }
};

}  // namespace detail

/// Handle to an immutable finite field. Copies share the same arithmetic
/// tables; two handles compare equal iff they denote the same constructed
/// field (same base and modulus).
class Field {
 public:
  Field() = default;

  static Field prime(std::uint64_t p) {
    if (!detail::is_prime(p) || p > (std::uint64_t{1} << 31))
      throw std::invalid_argument("field characteristic must be a prime below 2^31, got " + std::to_string(p));
    auto& reg = detail::FieldRegistry::instance();
    std::lock_guard lock(reg.mu);
    auto& slot = reg.primes[p];
    if (!slot) {
      auto d = std::make_shared<detail::FieldData>();
      d->p = p;
      d->q = p;
      d->name = "GF(" + std::to_string(p) + ")";
      slot = std::move(d);
    }
    return Field(slot);
  }

  /// Builds base[x]/(modulus) without checking irreducibility. Callers outside
  /// this library want make_extension(), which verifies the modulus first.
  static Field unchecked_extension(const Field& base, std::vector<Elem> modulus) {
    base.require_valid();
    if (modulus.size() < 2 || modulus.back() != 1)
      throw std::invalid_argument("extension modulus must be monic of degree >= 1");
    const int degree = static_cast<int>(modulus.size()) - 1;
    if (degree > detail::kMaxExtensionDegree) throw std::invalid_argument("extension degree too large");
    unsigned __int128 q = 1;
    for (int i = 0; i < degree; ++i) {
      q *= base.size();
      if (q > (static_cast<unsigned __int128>(1) << 62))
        throw std::invalid_argument("field cardinality exceeds 2^62");
    }
    for (auto c : modulus)
      if (c >= base.size()) throw std::invalid_argument("modulus coefficient outside base field");
    auto& reg = detail::FieldRegistry::instance();
    std::unique_lock lock(reg.mu);
    auto key = std::make_pair(base.data_.get(), modulus);
    if (auto it = reg.extensions.find(key); it != reg.extensions.end()) return Field(it->second);
    lock.unlock();

    auto d = std::make_shared<detail::FieldData>();
    d->p = base.characteristic();
    d->q = static_cast<std::uint64_t>(q);
    d->degree = degree;
    d->base = base.data_;
    d->modulus = modulus;
    d->name = base.name() + "[x]/(" + detail::coeffs_to_string(modulus) + ")";
    d->build_tables();

    lock.lock();
    auto [it, inserted] = reg.extensions.emplace(std::move(key), std::move(d));
    return Field(it->second);
  }

  bool valid() const { return data_ != nullptr; }
  std::uint64_t characteristic() const { return data().p; }
  std::uint64_t size() const { return data().q; }
  int degree() const { return data().degree; }
  bool is_prime_field() const { return data().is_prime(); }
  const std::string& name() const { return data().name; }

  int absolute_degree() const {
    int d = 1;
    for (auto* f = data_.get(); f; f = f->base.get()) d *= f->degree;
    return d;
  }

  Field base() const {
    if (is_prime_field()) throw std::domain_error(name() + " is a prime field and has no base");
    return Field(data().base);
  }

  std::span<const Elem> modulus() const { return data().modulus; }

  /// Residue class of x; for a degree-1 extension this is the root of the modulus.
  Elem generator() const {
    if (is_prime_field()) throw std::domain_error("prime field " + name() + " has no distinguished generator");
    if (degree() == 1) return data().base->neg(data().modulus[0]);
    return data().base->q;
  }

  /// Degree of this field over `sub` if `sub` lies on this field's tower.
  std::optional<int> degree_over(const Field& sub) const {
    int d = 1;
    for (auto* f = data_.get(); f; f = f->base.get()) {
      if (f == sub.data_.get()) return d;
      d *= f->degree;
    }
    return std::nullopt;
  }

  bool contains(Elem a) const { return a < size(); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const { return data().add(a, b); }
  Elem sub(Elem a, Elem b) const { return data().add(a, data().neg(b)); }
  Elem neg(Elem a) const { return data().neg(a); }
  Elem mul(Elem a, Elem b) const { return data().mul(a, b); }
  Elem inv(Elem a) const { return data().inv(a); }
  Elem div(Elem a, Elem b) const { return data().mul(a, data().inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const { return data().pow(a, e); }

  /// The integer n as an element of the prime subfield.
  Elem from_int(std::int64_t n) const {
    const auto p = static_cast<std::int64_t>(characteristic());
    return static_cast<Elem>(((n % p) + p) % p);
  }

  std::uint64_t multiplicative_order(Elem a) const {
    if (a == 0) throw DivisionByZero("zero has no multiplicative order");
    std::uint64_t ord = size() - 1;
    for (auto r : detail::prime_factors(size() - 1))
      while (ord % r == 0 && pow(a, ord / r) == 1) ord /= r;
    return ord;
  }

  friend bool operator==(const Field& a, const Field& b) { return a.data_ == b.data_; }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}

  void require_valid() const {
    if (!data_) throw std::logic_error("use of an unset Field handle");
  }
  const detail::FieldData& data() const {
    require_valid();
    return *data_;
  }

  std::shared_ptr<const detail::FieldData> data_;
};

inline void require_same_field(const Field& a, const Field& b, const char* what) {
  if (!(a == b)) throw std::domain_error(std::string(what) + ": field mismatch (" + a.name() + " vs " + b.name() + ")");
}

}  // namespace gqc

#endif  // GQC_FIELD_HPP
