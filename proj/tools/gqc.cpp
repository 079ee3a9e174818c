// gqc: command-line front end for the GQC code library.
//
// Exit status: 0 success, 1 parse or precondition error, 2 enumeration budget refused.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "gqc.hpp"

using json = nlohmann::ordered_json;
using namespace gqc;

namespace {

struct CodeSource {
  std::string file;
  std::uint64_t q = 0;
  std::string modulus, blocks;
  std::vector<std::string> gens;

  void attach(CLI::App* cmd) {
    cmd->add_option("file", file, "code-spec file");
    cmd->add_option("--q", q, "field size (instead of a file)");
    cmd->add_option("--modulus", modulus, "extension modulus for non-prime q, e.g. 1,1,1");
    cmd->add_option("--blocks", blocks, "block lengths, e.g. 3,5,9");
    cmd->add_option("--gen", gens, "generator, e.g. '1,1|0,1' (repeatable)");
  }

  CodeSpec load() const {
    if (!file.empty()) return read_code_spec(file);
    if (q == 0 || blocks.empty()) throw ParseError(0, "give a code-spec file or --q and --blocks");
    std::string text = "q=" + std::to_string(q) + "\n";
    if (!modulus.empty()) text += "modulus=" + modulus + "\n";
    text += "blocks=" + blocks + "\n";
    for (const auto& g : gens) text += "gen=" + g + "\n";
    return parse_code_spec(text);
  }
};

json ints(const Vec& v) { return json(v); }

json code_json(const LinearCode& L) {
  json basis = json::array();
  for (const auto& r : L.basis()) basis.push_back(ints(r));
  return {{"n", L.length()}, {"k", L.dimension()}, {"basis", basis}};
}

json distance_or_refusal(const LinearCode& L, const DistanceOptions& opt) {
  if (L.dimension() == 0) return nullptr;
  try {
    return min_distance(L, opt);
  } catch (const BudgetExceeded& e) {
    return std::string("refused: ") + e.what();
  }
}

json verdict_json(const std::string& property, const Verdict& v) {
  json j = {{"property", property}, {"value", v.value}, {"method", v.method()}, {"direct", v.direct}};
  j["constituent"] = v.constituent ? json(*v.constituent) : json(nullptr);
  j["routes_agree"] = v.routes_agree();
  j["evidence"] = v.evidence;
  return j;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (auto v : detail::parse_list(s, 0, "list")) out.push_back(static_cast<int>(v));
  return out;
}

Field field_for(std::uint64_t q, const std::string& modulus) {
  CodeSpec s;
  s.q = q;
  const auto [p, k] = CodeSpec::split_prime_power(q);
  if (k > 1)
    s.modulus = modulus.empty() ? find_irreducible(Field::prime(p), k) : detail::parse_list(modulus, 0, "modulus");
  return s.field();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized quasi-cyclic codes: decomposition, bounds, duality"};
  app.require_subcommand(1);
  DistanceOptions dopt;
  app.add_option("--budget", dopt.budget, "enumeration budget (default GQC_ENUM_BUDGET or 2^24)");
  app.add_option("--threads", dopt.threads, "worker threads for distance enumeration");

  std::function<json()> run;

  std::uint64_t fq = 0;
  int fm = 0;
  std::string fmod;
  auto* factor = app.add_subcommand("factor", "irreducible factors of x^m - 1 over F_q");
  factor->add_option("--q", fq, "field size")->required();
  factor->add_option("--m", fm, "modulus m")->required();
  factor->add_option("--modulus", fmod, "extension modulus for non-prime q");
  factor->callback([&] {
    run = [&] {
      const Field F = field_for(fq, fmod);
      const auto fact = factor_xm_minus_1(F, fm);
      json out = {{"q", fq}, {"m", fm}, {"factors", json::array()}};
      for (std::size_t i = 0; i < fact.factors.size(); ++i)
        out["factors"].push_back({{"poly", fact.factors[i].to_string()},
                                  {"coeffs", fact.factors[i].raw()},
                                  {"degree", fact.factors[i].degree()},
                                  {"coset", fact.cosets[i]}});
      return out;
    };
  });

  CodeSource dec_src;
  auto* dec = app.add_subcommand("decompose", "constituents of a GQC code");
  dec_src.attach(dec);
  dec->callback([&] {
    run = [&] {
      const auto C = dec_src.load().code();
      const auto S = decompose(C);
      json parts = json::array();
      for (const auto& p : S.parts) {
        std::vector<int> mask;
        for (bool b : p.support) mask.push_back(b ? 1 : 0);
        parts.push_back({{"factor", p.factor.f.to_string()},
                         {"field_size", p.factor.E.size()},
                         {"degree", p.factor.degree()},
                         {"support", mask},
                         {"dimension", p.code.dimension()},
                         {"basis", code_json(p.code)["basis"]}});
      }
      return json{{"blocks", C.blocks()}, {"fq_dimension", S.fq_dimension()}, {"constituents", parts}};
    };
  });

  CodeSource rec_src;
  auto* rec = app.add_subcommand("reconstruct", "rebuild a code from its constituents");
  rec_src.attach(rec);
  rec->callback([&] {
    run = [&] {
      const auto C = rec_src.load().code();
      const auto R = reconstruct(decompose(C));
      const auto L = to_linear(R);
      return json{{"spec", serialize(to_spec(R))}, {"k", L.dimension()}, {"equals_input", L == to_linear(C)}};
    };
  });

  CodeSource tr_src;
  auto* tr = app.add_subcommand("trace", "trace representation of a GQC code");
  tr_src.attach(tr);
  tr->callback([&] {
    run = [&] {
      const auto C = tr_src.load().code();
      const auto S = decompose(C);
      const auto T = trace_span(S);
      return json{{"trace_span", code_json(T)}, {"equals_code", T == to_linear(C)}};
    };
  });

  CodeSource dist_src;
  auto* dist = app.add_subcommand("distance", "exact minimum distance");
  dist_src.attach(dist);
  dist->callback([&] {
    run = [&] {
      const auto L = to_linear(dist_src.load().code());
      json out = {{"n", L.length()}, {"k", L.dimension()}};
      out["d"] = L.dimension() ? json(min_distance(L, dopt)) : json(nullptr);
      return out;
    };
  });

  CodeSource bound_src;
  auto* bnd = app.add_subcommand("bound", "Jensen-type distance bound");
  bound_src.attach(bnd);
  bnd->callback([&] {
    run = [&] {
      const auto C = bound_src.load().code();
      const auto rep = jensen_bound_gqc(C, dopt);
      json levels = json::array();
      for (std::size_t u = 0; u < rep.order.size(); ++u) {
        json cols = json::array();
        for (const auto& c : rep.columns[u]) cols.push_back(c ? json(*c) : json("inf"));
        levels.push_back({{"constituent", rep.order[u] + 1},
                          {"d", rep.constituent_distance[u]},
                          {"columns", cols},
                          {"D", rep.level_value[u]}});
      }
      return json{{"levels", levels}, {"bound", rep.bound}, {"distance", distance_or_refusal(to_linear(C), dopt)}};
    };
  });

  CodeSource dual_src;
  bool dual_direct_only = false;
  auto* dual = app.add_subcommand("dual", "Euclidean dual code");
  dual_src.attach(dual);
  dual->add_flag("--direct", dual_direct_only, "linear algebra only");
  dual->callback([&] {
    run = [&] {
      const auto C = dual_src.load().code();
      const auto direct = dual_direct(C);
      const auto Ld = to_linear(direct);
      json out = {{"k", Ld.dimension()}};
      if (!dual_direct_only && crt_available(C.field(), C.blocks())) {
        const auto D = dual_gqc(C);
        out["method"] = "constituent+direct";
        out["routes_agree"] = to_linear(D) == Ld;
        out["spec"] = serialize(to_spec(D));
      } else {
        out["method"] = "direct";
        out["spec"] = serialize(to_spec(direct));
      }
      return out;
    };
  });

  CodeSource chk_src;
  bool want_lcd = false, want_sd = false;
  auto* chk = app.add_subcommand("check", "LCD / self-dual verdicts");
  chk_src.attach(chk);
  chk->add_flag("--lcd", want_lcd, "test C and its dual meet trivially");
  chk->add_flag("--self-dual", want_sd, "test C equals its dual");
  chk->callback([&] {
    run = [&] {
      const auto C = chk_src.load().code();
      json out = json::array();
      if (want_lcd || !want_sd) out.push_back(verdict_json("lcd", is_lcd(C)));
      if (want_sd || !want_lcd) out.push_back(verdict_json("self_dual", is_self_dual(C)));
      return out.size() == 1 ? out[0] : out;
    };
  });

  std::vector<std::string> jux_files;
  auto* jux = app.add_subcommand("juxtapose", "juxtaposition [C_1 | C_2 | ...]");
  jux->add_option("files", jux_files, "code-spec files")->required();
  jux->callback([&] {
    run = [&] {
      std::vector<GqcCode> parts;
      for (const auto& f : jux_files) parts.push_back(read_code_spec(f).code());
      const auto E = juxtapose(parts);
      const auto L = to_linear(E);
      return json{{"blocks", E.blocks()},
                  {"n", L.length()},
                  {"k", L.dimension()},
                  {"d", distance_or_refusal(L, dopt)},
                  {"lcd", L.intersect(L.dual()).is_zero()},
                  {"spec", serialize(to_spec(E))}};
    };
  });

  std::uint64_t tq = 0;
  std::string tmod, tblocks, tout;
  std::size_t tgens = 1, tbudget = 256;
  bool tresume = false;
  auto* tab = app.add_subcommand("tabulate", "CSV of parameters of small GQC codes");
  tab->add_option("--q", tq, "field size")->required();
  tab->add_option("--modulus", tmod, "extension modulus for non-prime q");
  tab->add_option("--blocks", tblocks, "block-length set, e.g. 3,5,7 (empty for none)")->required();
  tab->add_option("--generators", tgens, "generators per code (1 or 2)");
  tab->add_option("--generator-budget", tbudget, "candidate generator sets per block list");
  tab->add_option("--out", tout, "output CSV path")->required();
  tab->add_flag("--resume", tresume, "keep complete rows already in the output");
  tab->callback([&] {
    run = [&] {
      TabulateOptions opt{field_for(tq, tmod), tblocks.empty() ? std::vector<int>{} : parse_int_list(tblocks), tgens,
                          tbudget, dopt};
      const auto rows = tabulate_to_file(opt, tout, tresume);
      return json{{"path", tout}, {"rows_written", rows}};
    };
  });

  std::vector<std::string> steps;
  auto* fam = app.add_subcommand("family", "rate and relative distance of juxtaposed families (CSV)");
  fam->add_option("--step", steps, "components of one step as n:k:d,n:k:d (repeatable)")->required();
  fam->callback([&] {
    run = [&] {
      std::vector<std::vector<CodeParams>> parsed;
      for (const auto& s : steps) {
        std::vector<CodeParams> comps;
        for (const auto& c : detail::split(s, ',')) {
          const auto v = detail::split(c, ':');
          if (v.size() != 3) throw ParseError(0, "component must be n:k:d, got '" + c + "'");
          comps.push_back({detail::parse_uint(v[0], 0, "n"), detail::parse_uint(v[1], 0, "k"),
                           detail::parse_uint(v[2], 0, "d")});
        }
        parsed.push_back(std::move(comps));
      }
      write_family_csv(std::cout, family_accounting(parsed));
      return json(nullptr);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    const json out = run();
    if (!out.is_null()) std::cout << out.dump(2) << '\n';
    return 0;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget refused: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
