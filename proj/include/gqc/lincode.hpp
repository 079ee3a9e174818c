#ifndef GQC_LINCODE_HPP
#define GQC_LINCODE_HPP

// Linear codes over any Field: canonical RREF, duals, sums and intersections,
// and exact minimum distance. This is the oracle layer that the structural
// code routines are checked against.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "gqc/errors.hpp"
#include "gqc/gf.hpp"

namespace gqc {

using Vec = std::vector<Elem>;

enum class Form { euclidean, hermitian };

inline std::size_t weight(const Vec& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem e) { return e != 0; }));
}

class LinearCode {
 public:
  LinearCode() = default;
  LinearCode(Field field, std::size_t n) : field_(std::move(field)), n_(n) {}
  LinearCode(Field field, std::size_t n, const std::vector<Vec>& generators) : LinearCode(std::move(field), n) {
    for (const auto& g : generators) insert(g);
  }

  static LinearCode full(const Field& f, std::size_t n) {
    std::vector<Vec> rows(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
    return {f, n, rows};
  }

  const Field& field() const { return field_; }
  std::size_t length() const { return n_; }
  std::size_t dimension() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  /// Reduced row echelon basis, rows sorted by pivot column.
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds v to the span; returns false if it was already a member.
  bool insert(Vec v) {
    check_vector(v);
    reduce_in_place(v);
    auto lead = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    if (lead == v.end()) return false;
    const auto piv = static_cast<std::size_t>(lead - v.begin());
    const Elem s = field_.inv(*lead);
    for (auto& e : v) e = field_.mul(e, s);
    for (auto& row : rows_) {
      const Elem c = row[piv];
      if (c != 0) axpy(row, field_.neg(c), v);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    const auto idx = pos - pivots_.begin();
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
  }

  Vec reduce(Vec v) const {
    check_vector(v);
    reduce_in_place(v);
    return v;
  }

  bool contains(const Vec& v) const {
    const Vec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](Elem e) { return e == 0; });
  }

  Vec encode(const Vec& msg) const {
    if (msg.size() != dimension()) throw std::invalid_argument("message length must equal the code dimension");
    Vec out(n_, 0);
    for (std::size_t i = 0; i < msg.size(); ++i)
      if (msg[i] != 0) axpy(out, msg[i], rows_[i]);
    return out;
  }

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.rows_ == b.rows_;
  }

  LinearCode dual(Form form = Form::euclidean) const {
    if (form == Form::hermitian && !conjugation_exponent(field_))
      throw std::domain_error("Hermitian dual unavailable over " + field_.name());
    LinearCode d(field_, n_);
    std::vector<bool> is_pivot(n_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    for (std::size_t c = 0; c < n_; ++c) {
      if (is_pivot[c]) continue;
      Vec h(n_, 0);
      h[c] = 1;
      for (std::size_t i = 0; i < rows_.size(); ++i) h[pivots_[i]] = field_.neg(rows_[i][c]);
      d.insert(std::move(h));
    }
    return form == Form::hermitian ? d.conjugated() : d;
  }

  /// Coordinatewise Hermitian conjugation of every codeword.
  LinearCode conjugated() const {
    LinearCode out(field_, n_);
    for (auto row : rows_) {
      for (auto& e : row) e = hermitian_conj(field_, e);
      out.insert(std::move(row));
    }
    return out;
  }

  /// Image under the monomial map c_j -> w_j c_j; weights must be nonzero.
  LinearCode scaled(const Vec& weights) const {
    check_vector(weights);
    if (std::find(weights.begin(), weights.end(), Elem{0}) != weights.end())
      throw std::invalid_argument("column weights must be nonzero");
    LinearCode out(field_, n_);
    for (auto row : rows_) {
      for (std::size_t j = 0; j < n_; ++j) row[j] = field_.mul(row[j], weights[j]);
      out.insert(std::move(row));
    }
    return out;
  }

  /// Projection onto the listed coordinates (in the given order).
  LinearCode restricted(const std::vector<std::size_t>& coords) const {
    LinearCode out(field_, coords.size());
    for (const auto& row : rows_) {
      Vec v(coords.size());
      for (std::size_t j = 0; j < coords.size(); ++j) v[j] = row.at(coords[j]);
      out.insert(std::move(v));
    }
    return out;
  }

  /// Inverse of restricted(): places coordinates into a length-n word, zeros elsewhere.
  LinearCode embedded(std::size_t n, const std::vector<std::size_t>& coords) const {
    if (coords.size() != n_) throw std::invalid_argument("embedding needs one target per coordinate");
    LinearCode out(field_, n);
    for (const auto& row : rows_) {
      Vec v(n, 0);
      for (std::size_t j = 0; j < n_; ++j) v.at(coords[j]) = row[j];
      out.insert(std::move(v));
    }
    return out;
  }

  LinearCode sum(const LinearCode& other) const {
    check_compatible(other);
    LinearCode out = *this;
    for (const auto& r : other.rows_) out.insert(r);
    return out;
  }

  /// Largest common subspace, via (C^perp + D^perp)^perp.
  LinearCode intersect(const LinearCode& other) const {
    check_compatible(other);
    return dual().sum(other.dual()).dual();
  }

  bool is_subcode_of(const LinearCode& other) const {
    check_compatible(other);
    return std::all_of(rows_.begin(), rows_.end(), [&](const Vec& r) { return other.contains(r); });
  }

 private:
  void check_vector(const Vec& v) const {
    if (v.size() != n_)
      throw std::invalid_argument("vector length " + std::to_string(v.size()) + " != code length " +
                                  std::to_string(n_));
    for (auto e : v)
      if (!field_.contains(e)) throw std::out_of_range("entry outside " + field_.name());
  }
  void check_compatible(const LinearCode& o) const {
    require_same_field(field_, o.field_, "code op");
    if (n_ != o.n_) throw std::invalid_argument("codes of different lengths");
  }
  void axpy(Vec& y, Elem a, const Vec& x) const {
    for (std::size_t j = 0; j < n_; ++j)
      if (x[j] != 0) y[j] = field_.add(y[j], field_.mul(a, x[j]));
  }
  void reduce_in_place(Vec& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Elem c = v[pivots_[i]];
      if (c != 0) axpy(v, field_.neg(c), rows_[i]);
    }
  }

  Field field_;
  std::size_t n_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Rank of the matrix given by rows (Gaussian elimination on a copy).
inline std::size_t rank_of(const Field& F, std::size_t n, const std::vector<Vec>& rows) {
  return LinearCode(F, n, rows).dimension();
}

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;

/// Enumeration budget: GQC_ENUM_BUDGET from the environment, else 2^24 codewords.
inline std::uint64_t default_budget() {
  if (const char* env = std::getenv("GQC_ENUM_BUDGET")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultEnumerationBudget;
}

struct DistanceOptions {
  std::uint64_t budget = default_budget();
  unsigned threads = 1;
};

namespace detail {

inline bool pow_within(std::uint64_t base, std::size_t exp, std::uint64_t limit, std::uint64_t& out) {
  unsigned __int128 acc = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > limit) return false;
  }
  out = static_cast<std::uint64_t>(acc);
  return true;
}

template <class Task>
std::size_t parallel_min(std::size_t tasks, unsigned threads, Task&& run) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks, 1))));
  std::vector<std::size_t> best(threads, std::numeric_limits<std::size_t>::max());
  auto worker = [&](unsigned t) {
    for (std::size_t c = t; c < tasks; c += threads) best[t] = std::min(best[t], run(c));
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  return *std::min_element(best.begin(), best.end());
}

inline std::size_t binary_min_weight(const LinearCode& C, unsigned threads) {
  const std::size_t n = C.length(), k = C.dimension();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(k, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (C.basis()[i][j]) rows[i][j / 64] |= std::uint64_t{1} << (j % 64);

  const std::size_t split = threads > 1 ? std::min<std::size_t>(k, 6) : 0;
  const std::size_t low = k - split;
  return parallel_min(std::size_t{1} << split, threads, [&](std::size_t chunk) {
    std::vector<std::uint64_t> w(words, 0);
    for (std::size_t b = 0; b < split; ++b)
      if (chunk >> b & 1)
        for (std::size_t x = 0; x < words; ++x) w[x] ^= rows[low + b][x];
    auto wt = [&] {
      std::size_t s = 0;
      for (auto x : w) s += static_cast<std::size_t>(std::popcount(x));
      return s;
    };
    std::size_t best = chunk ? wt() : std::numeric_limits<std::size_t>::max();
    const std::uint64_t count = std::uint64_t{1} << low;
    for (std::uint64_t i = 1; i < count; ++i) {
      const auto r = static_cast<std::size_t>(std::countr_zero(i));
      for (std::size_t x = 0; x < words; ++x) w[x] ^= rows[r][x];
      best = std::min(best, wt());
    }
    return best;
  });
}

// Enumerates messages whose first nonzero digit is 1; scalar multiples share weights.
inline std::size_t generic_min_weight(const LinearCode& C, unsigned threads) {
  const Field& F = C.field();
  const std::size_t n = C.length(), k = C.dimension();
  const std::uint64_t Q = F.size();
  const auto& G = C.basis();
  // Task = (leading position, value of the next digit or none).
  struct TaskSpec {
    std::size_t lead;
    Elem next;
  };
  std::vector<TaskSpec> specs;
  for (std::size_t i = 0; i < k; ++i) {
    if (i + 1 == k) {
      specs.push_back({i, 0});
    } else {
      for (Elem v = 0; v < Q; ++v) specs.push_back({i, v});
    }
  }
  return parallel_min(specs.size(), threads, [&](std::size_t t) {
    const auto [lead, next] = specs[t];
    Vec w = G[lead];
    std::size_t first_free = lead + 1;
    if (lead + 1 < k) {
      for (std::size_t j = 0; j < n; ++j) w[j] = F.add(w[j], F.mul(next, G[lead + 1][j]));
      first_free = lead + 2;
    }
    std::size_t best = weight(w);
    std::vector<Elem> digits(k, 0);
    while (true) {
      std::size_t j = k;
      bool advanced = false;
      while (j-- > first_free) {
        const Elem old = digits[j];
        const Elem nv = old + 1 < Q ? old + 1 : 0;
        const Elem delta = F.sub(nv, old);
        for (std::size_t c = 0; c < n; ++c)
          if (G[j][c]) w[c] = F.add(w[c], F.mul(delta, G[j][c]));
        digits[j] = nv;
        if (nv != 0) {
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
      best = std::min(best, weight(w));
    }
    return best;
  });
}

}  // namespace detail

/// Exact minimum distance by enumerating all |F|^k messages. Refuses (throws
/// BudgetExceeded) rather than estimating when |F|^k exceeds the budget. The
/// result does not depend on the thread count.
inline std::size_t min_distance_bruteforce(const LinearCode& C, const DistanceOptions& opt = {}) {
  if (C.dimension() == 0) throw std::invalid_argument("zero code has no minimum distance");
  std::uint64_t count = 0;
  if (!detail::pow_within(C.field().size(), C.dimension(), opt.budget, count))
    throw BudgetExceeded("enumerating " + std::to_string(C.field().size()) + "^" + std::to_string(C.dimension()) +
                         " codewords exceeds the budget of " + std::to_string(opt.budget));
  if (C.field().size() == 2) return detail::binary_min_weight(C, opt.threads);
  return detail::generic_min_weight(C, opt.threads);
}

/// Exact minimum distance as the least |S| such that some nonzero codeword is
/// supported inside S, i.e. the columns outside S have rank < k. Cost grows
/// with 2^n instead of |F|^k, which suits short codes over large fields.
inline std::size_t min_distance_by_supports(const LinearCode& C, const DistanceOptions& opt = {}) {
  const std::size_t n = C.length(), k = C.dimension();
  if (k == 0) throw std::invalid_argument("zero code has no minimum distance");
  if (n >= 63 || (std::uint64_t{1} << n) > opt.budget)
    throw BudgetExceeded("support search over 2^" + std::to_string(n) + " subsets exceeds the budget of " +
                         std::to_string(opt.budget));
  const auto& G = C.basis();
  for (std::size_t w = 1; w <= n; ++w) {
    std::vector<bool> in(n, false);
    std::fill(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(w), true);
    std::sort(in.begin(), in.end());  // lexicographically first arrangement; next_permutation walks all
    do {
      std::vector<std::size_t> outside;
      for (std::size_t j = 0; j < n; ++j)
        if (!in[j]) outside.push_back(j);
      std::vector<Vec> sub(k, Vec(outside.size()));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < outside.size(); ++j) sub[i][j] = G[i][outside[j]];
      if (rank_of(C.field(), outside.size(), sub) < k) return w;
    } while (std::next_permutation(in.begin(), in.end()));
  }
  throw std::logic_error("nonzero code without a supported codeword");
}

/// Exact minimum distance using whichever exhaustive method is cheaper.
inline std::size_t min_distance(const LinearCode& C, const DistanceOptions& opt = {}) {
  if (C.dimension() == 0) throw std::invalid_argument("zero code has no minimum distance");
  const long double enum_cost = std::pow(static_cast<long double>(C.field().size()), C.dimension()) /
                                std::max<long double>(1, C.field().size() - 1);
  const long double supp_cost = std::pow(2.0L, C.length()) * C.dimension();
  const bool supports_ok = C.length() < 63 && (std::uint64_t{1} << C.length()) <= opt.budget;
  if (supports_ok && supp_cost < enum_cost) return min_distance_by_supports(C, opt);
  return min_distance_bruteforce(C, opt);
}

}  // namespace gqc

#endif  // GQC_LINCODE_HPP
