#ifndef GQC_TABULATE_HPP
#define GQC_TABULATE_HPP

// Parameter tables for small GQC codes. Candidates are built from the
// generator polynomials of cyclic codes in each block, enumerated in a fixed
// order, so the CSV is byte-identical across runs and can be resumed.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gqc/bounds.hpp"
#include "gqc/codespec.hpp"
#include "gqc/duality.hpp"

namespace gqc {

struct TabulateOptions {
  Field field;
  std::vector<int> block_set;         // each table row uses a nonempty subset of these
  std::size_t max_generators = 1;     // 1 or 2
  std::size_t generator_budget = 256; // candidate generator sets per block list
  DistanceOptions distance;
};

inline constexpr const char* kTableHeader = "blocks,generators,k,d,bound,self_dual,lcd";

/// Generator polynomials (x^m-1)/prod(S) of all cyclic codes in R_m, with S
/// running over the factor subsets in binary counting order (S empty gives 0).
inline std::vector<RingElem> divisor_menu(const Field& F, int m) {
  const auto fact = factor_xm_minus_1(F, m);
  const std::size_t s = fact.factors.size();
  std::vector<RingElem> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
    Poly check = Poly::constant(F, 1);
    for (std::size_t i = 0; i < s; ++i)
      if (mask >> i & 1) check = check * fact.factors[i];
    out.push_back(RingElem::from_poly(divrem(Poly::xm_minus_one(F, m), check).first, m));
  }
  return out;
}

namespace detail {

inline std::string join_ints(const std::vector<int>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return s;
}

inline std::string generator_text(const std::vector<GenTuple>& gens) {
  std::string s;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (g) s += ";";
    for (std::size_t j = 0; j < gens[g].size(); ++j) {
      if (j) s += "|";
      Vec c = gens[g][j].coeffs();
      trim(c);
      if (c.empty()) s += "0";
      for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
    }
  }
  return s;
}

inline std::vector<std::vector<int>> block_subsets(std::vector<int> set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  std::vector<std::vector<int>> out;
  for (std::size_t size = 1; size <= set.size(); ++size) {
    std::vector<bool> pick(set.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<int> b;
      for (std::size_t i = 0; i < set.size(); ++i)
        if (pick[i]) b.push_back(set[i]);
      out.push_back(std::move(b));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

}  // namespace detail

/// Produces table rows in order, calling `emit` with each complete CSV line.
/// The first `skip` rows are generated but not emitted.
inline void tabulate(const TabulateOptions& opt, const std::function<void(const std::string&)>& emit,
                     std::size_t skip = 0) {
  if (opt.max_generators < 1 || opt.max_generators > 2)
    throw std::invalid_argument("tabulation supports 1 or 2 generators");
  std::size_t row = 0;
  for (const auto& blocks : detail::block_subsets(opt.block_set)) {
    for (int m : blocks) require_coprime_block(opt.field, m);
    std::vector<std::vector<RingElem>> menus;
    for (int m : blocks) menus.push_back(divisor_menu(opt.field, m));
    std::vector<GenTuple> singles;
    std::vector<std::size_t> idx(blocks.size(), 0);
    while (true) {
      GenTuple t;
      for (std::size_t j = 0; j < blocks.size(); ++j) t.push_back(menus[j][idx[j]]);
      if (std::any_of(t.begin(), t.end(), [](const RingElem& r) { return !r.is_zero(); })) singles.push_back(t);
      std::size_t j = 0;
      while (j < blocks.size() && ++idx[j] == menus[j].size()) idx[j++] = 0;
      if (j == blocks.size()) break;
    }
    std::vector<std::vector<GenTuple>> candidates;
    for (const auto& s : singles) candidates.push_back({s});
    if (opt.max_generators == 2)
      for (std::size_t a = 0; a < singles.size(); ++a)
        for (std::size_t b = a + 1; b < singles.size(); ++b) candidates.push_back({singles[a], singles[b]});
    if (candidates.size() > opt.generator_budget) candidates.resize(opt.generator_budget);

    std::vector<LinearCode> seen;
    for (const auto& gens : candidates) {
      GqcCode C(opt.field, blocks, gens);
      const LinearCode L = to_linear(C);
      if (std::find(seen.begin(), seen.end(), L) != seen.end()) continue;
      seen.push_back(L);
      if (row++ < skip) continue;
      std::string d = "skipped", bound = "skipped";
      try {
        d = std::to_string(min_distance(L, opt.distance));
      } catch (const BudgetExceeded&) {
      }
      try {
        bound = std::to_string(jensen_bound_gqc(C, opt.distance).bound);
      } catch (const BudgetExceeded&) {
      }
      const bool sd = L == L.dual();
      const bool lcd = L.intersect(L.dual()).is_zero();
      std::ostringstream os;
      os << detail::join_ints(blocks, ' ') << ',' << detail::generator_text(gens) << ',' << L.dimension() << ','
         << d << ',' << bound << ',' << (sd ? "true" : "false") << ',' << (lcd ? "true" : "false");
      emit(os.str());
    }
  }
}

/// Writes the table to `path`. With `resume`, complete rows already in the
/// file are kept and generation continues after them.
inline std::size_t tabulate_to_file(const TabulateOptions& opt, const std::string& path, bool resume) {
  std::size_t done = 0;
  std::string kept;
  if (resume && std::filesystem::exists(path)) {
    std::ifstream in(path, std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto last_nl = content.rfind('\n');
    kept = last_nl == std::string::npos ? "" : content.substr(0, last_nl + 1);
    const std::string header = std::string(kTableHeader) + "\n";
    if (kept.compare(0, header.size(), header) != 0) {
      kept.clear();
    } else {
      done = static_cast<std::size_t>(std::count(kept.begin(), kept.end(), '\n')) - 1;
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << (kept.empty() ? std::string(kTableHeader) + "\n" : kept);
  out.flush();
  std::size_t written = 0;
  tabulate(
      opt,
      [&](const std::string& line) {
        out << line << '\n';
        out.flush();
        ++written;
      },
      done);
  return written;
}

}  // namespace gqc

#endif  // GQC_TABULATE_HPP
