#include <gtest/gtest.h>

#include "support.hpp"

using namespace gqc;
using namespace gqc::testing;

namespace {

GqcCode repetition(const Field& F, const std::vector<int>& blocks) {
  std::vector<Vec> g;
  for (int m : blocks) g.push_back(Vec(static_cast<std::size_t>(m), 1));
  return GqcCode::from_coeffs(F, blocks, {g});
}

Elem dot(const Field& F, const Vec& a, const Vec& b) {
  Elem s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s = F.add(s, F.mul(a[j], b[j]));
  return s;
}

std::size_t block_sum(const std::vector<int>& blocks) {
  std::size_t n = 0;
  for (int m : blocks) n += static_cast<std::size_t>(m);
  return n;
}

}  // namespace

TEST(Profile, PairsShareSupport) {
  for (const auto& F : {F2(), F3(), F4(), F5()}) {
    const auto pool = coprime_pool(F, 13);
    const std::vector<int> blocks(pool.begin() + 1, pool.begin() + 4);
    const auto S = constituent_frame(F, blocks);
    const auto prof = duality_profile(S);
    EXPECT_EQ(prof.self_reciprocal.size() + 2 * prof.pairs.size(), S.parts.size());
    for (auto i : prof.self_reciprocal) EXPECT_EQ(S.parts[i].factor.f, reciprocal(S.parts[i].factor.f));
    for (const auto& pr : prof.pairs) {
      EXPECT_EQ(S.parts[pr.star].factor.f, reciprocal(S.parts[pr.h].factor.f));
      EXPECT_EQ(S.parts[pr.h].support, S.parts[pr.star].support);
    }
  }
}

TEST(Dual, RepetitionIsParityCheck) {
  const std::vector<int> blocks{3, 5, 7};
  const auto C = repetition(F2(), blocks);
  const auto D = to_linear(dual_gqc(C));
  EXPECT_EQ(D.dimension(), 14u);
  Rng rng(40);
  for (int t = 0; t < 50; ++t) {
    const Vec v = random_vec(rng, F2(), 15);
    EXPECT_EQ(D.contains(v), weight(v) % 2 == 0);
  }
  EXPECT_EQ(D, to_linear(dual_direct(C)));
}

TEST(Dual, ZeroCodeHasFullDual) {
  const GqcCode Z(F3(), {2, 4});
  EXPECT_EQ(to_linear(dual_gqc(Z)), LinearCode::full(F3(), 6));
  EXPECT_EQ(to_linear(dual_direct(Z)), LinearCode::full(F3(), 6));
}

TEST(Dual, ConstituentRouteMatchesDirect) {
  Rng rng(41);
  for (const auto& F : {F2(), F3(), F4(), F5()}) {
    const auto pool = coprime_pool(F, F.size() == 4 ? 9 : 13);
    for (int t = 0; t < 25; ++t) {
      const auto C = random_gqc(rng, F, pool, 3, 2);
      const auto L = to_linear(C);
      const auto D = to_linear(dual_gqc(C));
      EXPECT_EQ(D, L.dual()) << F.name();
      EXPECT_EQ(L.dimension() + D.dimension(), block_sum(C.blocks()));
      for (const auto& c : L.basis())
        for (const auto& d : D.basis()) EXPECT_EQ(dot(F, c, d), 0u);
    }
  }
}

TEST(Dual, DualConstituentsAreConstituentsOfDual) {
  Rng rng(42);
  for (const auto& F : {F2(), F3()}) {
    for (int t = 0; t < 20; ++t) {
      const auto C = random_gqc(rng, F, coprime_pool(F, 9), 3, 2);
      const auto D1 = dual_constituents(decompose(C));
      const auto D2 = decompose(dual_direct(C));
      for (std::size_t i = 0; i < D1.parts.size(); ++i) EXPECT_EQ(D1.parts[i].code, D2.parts[i].code);
    }
  }
}

TEST(Verdicts, CordaroWagner) {
  auto cw = [](const std::vector<int>& b) {
    auto ones = [](int m) { return Vec(static_cast<std::size_t>(m), 1); };
    return GqcCode::from_coeffs(F2(), b, {{ones(b[0]), {}, ones(b[2])}, {{}, ones(b[1]), ones(b[2])}});
  };
  const auto v16 = is_lcd(cw({6, 5, 5}));
  EXPECT_TRUE(v16.value);
  EXPECT_EQ(v16.method(), "direct");
  const auto v12 = is_lcd(cw({4, 4, 4}));
  EXPECT_FALSE(v12.value);
  EXPECT_EQ(v12.method(), "direct");
  // Gram matrix oracle: LCD iff G G^T is nonsingular
  const Vec ones16(16, 1);
  EXPECT_EQ(gram_rank(to_linear(cw({6, 5, 5})), ones16, false), 2u);
  EXPECT_EQ(gram_rank(to_linear(cw({4, 4, 4})), Vec(12, 1), false), 0u);

  const auto v355 = is_lcd(cw({3, 5, 5}));
  EXPECT_EQ(v355.method(), "constituent+direct");
  EXPECT_TRUE(v355.routes_agree());
}

TEST(Verdicts, RepetitionLcdIffLengthNotDivisibleByP) {
  for (const auto& F : {F2(), F3(), F5()}) {
    const auto pool = coprime_pool(F, 13);
    for (std::size_t a = 0; a < pool.size(); ++a)
      for (std::size_t b = a; b < pool.size(); ++b) {
        const std::vector<int> blocks{pool[a], pool[b]};
        const auto v = is_lcd(repetition(F, blocks));
        EXPECT_EQ(v.value, block_sum(blocks) % F.characteristic() != 0);
        EXPECT_TRUE(v.routes_agree());
      }
  }
}

TEST(Verdicts, RandomRoutesAgree) {
  Rng rng(43);
  for (const auto& F : {F2(), F3(), F4(), F5()}) {
    const auto pool = coprime_pool(F, F.size() == 4 ? 9 : 13);
    for (int t = 0; t < 25; ++t) {
      const auto C = random_gqc(rng, F, pool, 3, 2);
      const auto sd = is_self_dual(C), lcd = is_lcd(C);
      EXPECT_TRUE(sd.routes_agree());
      EXPECT_TRUE(lcd.routes_agree());
      EXPECT_EQ(sd.evidence.empty(), sd.value);
      EXPECT_EQ(lcd.evidence.empty(), lcd.value);
      if (sd.value) EXPECT_FALSE(lcd.value);
    }
  }
}

TEST(Verdicts, SeededSelfDual) {
  Rng rng(44);
  int built = 0;
  for (const auto& F : {F2(), F4()}) {
    const auto pool = coprime_pool(F, 9);
    for (int t = 0; t < 30; ++t) {
      std::vector<int> blocks;
      for (std::size_t j = 0; j < 1 + rng() % 2; ++j) {
        const int m = pool[rng() % pool.size()];
        blocks.push_back(m);
        blocks.push_back(m);
      }
      const auto C = seeded_self_dual(rng, F, blocks);
      if (!C) continue;
      ++built;
      const auto L = to_linear(*C);
      EXPECT_EQ(2 * L.dimension(), block_sum(blocks));
      for (const auto& a : L.basis())
        for (const auto& b : L.basis()) EXPECT_EQ(dot(F, a, b), 0u);
      const auto v = is_self_dual(*C);
      EXPECT_TRUE(v.value);
      EXPECT_EQ(v.constituent, std::optional<bool>(true));
    }
  }
  EXPECT_GT(built, 40);
}

TEST(Verdicts, SeededLcd) {
  Rng rng(45);
  for (const auto& F : {F2(), F3(), F4(), F5()}) {
    const auto pool = coprime_pool(F, 9);
    for (int t = 0; t < 15; ++t) {
      std::vector<int> blocks;
      for (std::size_t j = 0; j < 1 + rng() % 3; ++j) blocks.push_back(pool[rng() % pool.size()]);
      const auto C = seeded_lcd(rng, F, blocks);
      const auto L = to_linear(C);
      EXPECT_EQ(gram_rank(L, Vec(L.length(), 1), false), L.dimension());
      const auto v = is_lcd(C);
      EXPECT_TRUE(v.value) << F.name();
      EXPECT_EQ(v.constituent, std::optional<bool>(true));
    }
  }
}

TEST(Iota, InverseAndGeneratorImage) {
  const Field F = F2();
  const auto S = constituent_frame(F, {7});
  const auto prof = duality_profile(S);
  ASSERT_EQ(prof.pairs.size(), 1u);
  const auto& h = S.parts[prof.pairs[0].h].factor;
  const auto& hs = S.parts[prof.pairs[0].star].factor;
  const LinearCode one(hs.E, 1, {{hs.alpha}});
  const auto img = iota(h, hs, one);
  EXPECT_TRUE(img.contains({h.E.inv(h.alpha)}));
  Rng rng(46);
  for (int t = 0; t < 10; ++t) {
    const auto L = random_linear(rng, hs.E, 3, 2);
    EXPECT_EQ(iota_inverse(h, hs, iota(h, hs, L)), L);
  }
}
