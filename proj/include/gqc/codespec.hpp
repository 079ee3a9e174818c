#ifndef GQC_CODESPEC_HPP
#define GQC_CODESPEC_HPP

// Line-oriented code-spec files:
//
//   # comment
//   q=4
//   modulus=1,1,1          (only for non-prime q; irreducible over F_p, ascending)
//   blocks=3,5
//   gen=1,1|0,1,0,0,1      (one polynomial per block, ascending coefficients)
//
// Coefficients are element codes of F_q: sum c_k p^k for the coordinates c_k
// of the element in the power basis of the modulus root.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gqc/errors.hpp"
#include "gqc/gqc.hpp"

namespace gqc {

struct CodeSpec {
  std::uint64_t q = 0;
  std::vector<Elem> modulus;  // empty for prime q
  std::vector<int> blocks;
  std::vector<std::vector<Vec>> generators;

  Field field() const {
    const auto [p, k] = split_prime_power(q);
    const Field Fp = Field::prime(p);
    if (k == 1) return Fp;
    return make_extension(Fp, modulus);
  }

  GqcCode code() const { return GqcCode::from_coeffs(field(), blocks, generators); }

  static std::pair<std::uint64_t, int> split_prime_power(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power, got " + std::to_string(q));
    const auto primes = detail::prime_factors(q);
    if (primes.size() != 1) throw std::invalid_argument("q must be a prime power, got " + std::to_string(q));
    int k = 0;
    for (auto v = q; v > 1; v /= primes[0]) ++k;
    return {primes[0], k};
  }
};

namespace detail {

inline std::string trim_ws(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim_ws(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

inline std::uint64_t parse_uint(const std::string& s, std::size_t line, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, "expected a non-negative integer for " + what + ", got '" + s + "'");
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    throw ParseError(line, what + " out of range: " + s);
  }
}

inline std::vector<std::uint64_t> parse_list(const std::string& s, std::size_t line, const std::string& what) {
  std::vector<std::uint64_t> out;
  for (const auto& tok : split(s, ',')) out.push_back(parse_uint(tok, line, what));
  if (out.empty()) throw ParseError(line, "empty list for " + what);
  return out;
}

}  // namespace detail

inline CodeSpec parse_code_spec(std::istream& in) {
  CodeSpec spec;
  std::optional<std::size_t> q_line, blocks_line;
  std::vector<std::pair<std::size_t, std::string>> gen_lines;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    const std::string s = detail::trim_ws(raw);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected key=value, got '" + s + "'");
    const std::string key = detail::trim_ws(s.substr(0, eq));
    const std::string val = detail::trim_ws(s.substr(eq + 1));
    if (key == "q") {
      if (q_line) throw ParseError(line, "duplicate q");
      q_line = line;
      spec.q = detail::parse_uint(val, line, "q");
      try {
        CodeSpec::split_prime_power(spec.q);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line, e.what());
      }
    } else if (key == "modulus") {
      if (!spec.modulus.empty()) throw ParseError(line, "duplicate modulus");
      for (auto c : detail::parse_list(val, line, "modulus")) spec.modulus.push_back(c);
    } else if (key == "blocks") {
      if (blocks_line) throw ParseError(line, "duplicate blocks");
      blocks_line = line;
      for (auto m : detail::parse_list(val, line, "blocks")) {
        if (m < 1 || m > 4096) throw ParseError(line, "block length out of range: " + std::to_string(m));
        spec.blocks.push_back(static_cast<int>(m));
      }
    } else if (key == "gen") {
      gen_lines.emplace_back(line, val);
    } else {
      throw ParseError(line, "unknown key '" + key + "'");
    }
  }
  if (!q_line) throw ParseError(0, "missing q=");
  if (!blocks_line) throw ParseError(0, "missing blocks=");
  const auto [p, k] = CodeSpec::split_prime_power(spec.q);
  if (k == 1 && !spec.modulus.empty()) throw ParseError(*q_line, "modulus given for prime q");
  if (k > 1) {
    if (spec.modulus.empty()) spec.modulus = find_irreducible(Field::prime(p), k);
    if (spec.modulus.size() != static_cast<std::size_t>(k) + 1)
      throw ParseError(*q_line, "modulus degree must be " + std::to_string(k) + " for q=" + std::to_string(spec.q));
    try {
      (void)spec.field();
    } catch (const std::invalid_argument& e) {
      throw ParseError(*q_line, e.what());
    }
  }
  for (const auto& [ln, val] : gen_lines) {
    const auto polys = detail::split(val, '|');
    if (polys.size() != spec.blocks.size())
      throw ParseError(ln, "generator has " + std::to_string(polys.size()) + " polynomials, expected " +
                               std::to_string(spec.blocks.size()));
    std::vector<Vec> g;
    for (std::size_t j = 0; j < polys.size(); ++j) {
      Vec c = detail::parse_list(polys[j], ln, "coefficient");
      for (auto e : c)
        if (e >= spec.q) throw ParseError(ln, "coefficient " + std::to_string(e) + " outside F_" + std::to_string(spec.q));
      detail::trim(c);
      if (c.size() > static_cast<std::size_t>(spec.blocks[j]))
        throw ParseError(ln, "polynomial " + std::to_string(j) + " has degree >= block length " +
                                 std::to_string(spec.blocks[j]));
      g.push_back(std::move(c));
    }
    spec.generators.push_back(std::move(g));
  }
  return spec;
}

inline CodeSpec parse_code_spec(const std::string& text) {
  std::istringstream is(text);
  return parse_code_spec(is);
}

inline CodeSpec read_code_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_code_spec(in);
}

inline std::string serialize(const CodeSpec& spec) {
  auto join = [](const auto& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s.empty() ? std::string("0") : s;
  };
  std::string out = "q=" + std::to_string(spec.q) + "\n";
  if (!spec.modulus.empty()) out += "modulus=" + join(spec.modulus) + "\n";
  out += "blocks=" + join(spec.blocks) + "\n";
  for (const auto& g : spec.generators) {
    out += "gen=";
    for (std::size_t j = 0; j < g.size(); ++j) {
      Vec c = g[j];
      detail::trim(c);
      out += (j ? "|" : "") + join(c);
    }
    out += "\n";
  }
  return out;
}

/// Spec for an existing code (modulus taken from its field).
inline CodeSpec to_spec(const GqcCode& C) {
  CodeSpec s;
  s.q = C.field().size();
  if (!C.field().is_prime_field()) {
    if (!C.field().base().is_prime_field()) throw std::invalid_argument("code-spec files need F_p or F_p[x]/(f)");
    s.modulus.assign(C.field().modulus().begin(), C.field().modulus().end());
  }
  s.blocks = C.blocks();
  for (const auto& g : C.generators()) {
    std::vector<Vec> t;
    for (const auto& r : g) {
      Vec c = r.coeffs();
      detail::trim(c);
      t.push_back(std::move(c));
    }
    s.generators.push_back(std::move(t));
  }
  return s;
}

}  // namespace gqc

#endif  // GQC_CODESPEC_HPP
