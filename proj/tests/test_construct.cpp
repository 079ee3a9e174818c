#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace gqc;
using namespace gqc::testing;

TEST(Juxtapose, SingleCodeIsItself) {
  Rng rng(50);
  const auto C = random_gqc(rng, F3(), coprime_pool(F3(), 8), 3, 2);
  const auto J = juxtapose({C});
  EXPECT_EQ(J.blocks(), C.blocks());
  EXPECT_EQ(to_linear(J), to_linear(C));
}

TEST(Juxtapose, Errors) {
  EXPECT_THROW(juxtapose({}), std::invalid_argument);
  EXPECT_THROW(juxtapose({GqcCode(F2(), {3}), GqcCode(F3(), {2})}), std::domain_error);
}

TEST(Juxtapose, DirectSumProperties) {
  Rng rng(51);
  for (const auto& F : {F2(), F3()}) {
    for (int t = 0; t < 25; ++t) {
      const auto pool = coprime_pool(F, 5);
      std::vector<GqcCode> parts;
      for (std::size_t i = 0; i < 1 + rng() % 3; ++i) parts.push_back(random_gqc(rng, F, pool, 2, 2));
      const auto J = juxtapose(parts);
      const auto L = to_linear(J);
      std::size_t k = 0, n = 0;
      std::optional<std::size_t> d;
      bool all_lcd = true, small = true;
      for (const auto& p : parts) {
        const auto Lp = to_linear(p);
        // each part sits in its own coordinates
        for (const auto& row : Lp.basis()) {
          Vec v(L.length(), 0);
          std::copy(row.begin(), row.end(), v.begin() + static_cast<std::ptrdiff_t>(n));
          EXPECT_TRUE(L.contains(v));
        }
        k += Lp.dimension();
        n += Lp.length();
        if (!Lp.is_zero()) d = d ? std::min(*d, min_distance(Lp)) : min_distance(Lp);
        small = small && Lp.dimension() <= 8;
        all_lcd = all_lcd && Lp.intersect(Lp.dual()).is_zero();
      }
      EXPECT_EQ(L.length(), n);
      EXPECT_EQ(L.dimension(), k);
      if (d && small) EXPECT_EQ(min_distance(L), *d);
      EXPECT_EQ(is_lcd(J).value, all_lcd);
      EXPECT_TRUE(is_gqc(L, J.blocks()));
    }
  }
}

TEST(FindQccd, SmallCoIndices) {
  const auto r3 = find_qccd(F2(), 3, 2, 100);
  ASSERT_FALSE(r3.empty());
  for (const auto& f : r3) {
    const auto L = to_linear(f.code);
    EXPECT_TRUE(L.intersect(L.dual()).is_zero());
    EXPECT_EQ(f.k, L.dimension());
    EXPECT_EQ(f.d, min_distance_by_supports(L));
  }
  bool has_632 = false;
  for (const auto& f : r3) has_632 = has_632 || (f.k == 3 && f.d == 2);
  EXPECT_TRUE(has_632);
  for (std::size_t a = 0; a < r3.size(); ++a)
    for (std::size_t b = a + 1; b < r3.size(); ++b) EXPECT_NE(to_linear(r3[a].code), to_linear(r3[b].code));
  EXPECT_THROW(find_qccd(F2(), 7, 4, 10, 1000), BudgetExceeded);
}

TEST(FindQccd, JuxtapositionOfLcdIsLcd) {
  const auto r3 = find_qccd(F2(), 3, 2, 6);
  const auto r5 = find_qccd(F2(), 5, 2, 6);
  for (const auto& a : r3)
    for (const auto& b : r5) {
      const auto J = juxtapose({a.code, b.code});
      const auto v = is_lcd(J);
      EXPECT_TRUE(v.value);
      EXPECT_EQ(v.method(), "constituent+direct");
      EXPECT_TRUE(v.routes_agree());
      EXPECT_EQ(to_linear(J).dimension(), a.k + b.k);
      EXPECT_EQ(min_distance(to_linear(J)), std::min(a.d, b.d));
    }
}

TEST(Family, ParamsAndExactRatios) {
  const std::vector<CodeParams> parts{{6, 3, 2}, {10, 4, 4}};
  const auto p = juxtaposed_params(parts);
  EXPECT_EQ(p.n, 16u);
  EXPECT_EQ(p.k, 7u);
  EXPECT_EQ(p.d, 2u);
  EXPECT_EQ(weighted_rate(parts), Rational(7, 16));
  EXPECT_EQ(weighted_relative_distance(parts), Rational(1, 8));
  EXPECT_EQ(juxtaposed_params({{5, 0, 0}, {7, 1, 7}}).d, 7u);
  EXPECT_THROW(juxtaposed_params({{5, 0, 0}}), std::invalid_argument);
}

TEST(Family, WeightedFormulasMatchDirectRatios) {
  Rng rng(52);
  for (int t = 0; t < 200; ++t) {
    std::vector<CodeParams> parts;
    for (std::size_t i = 0; i < 1 + rng() % 5; ++i) {
      const std::size_t n = 1 + rng() % 40;
      const std::size_t k = 1 + rng() % n;
      parts.push_back({n, k, 1 + rng() % (n - k + 1)});
    }
    const auto p = juxtaposed_params(parts);
    const auto n = static_cast<std::int64_t>(p.n);
    EXPECT_EQ(weighted_rate(parts), Rational(static_cast<std::int64_t>(p.k), n));
    EXPECT_EQ(weighted_relative_distance(parts), Rational(static_cast<std::int64_t>(p.d), n));
  }
}

TEST(Family, Csv) {
  const auto rows = family_accounting({{{6, 3, 2}}, {{6, 3, 2}, {10, 4, 4}}});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].rate, Rational(1, 2));
  EXPECT_EQ(rows[1].relative_distance, Rational(1, 8));
  std::ostringstream os;
  write_family_csv(os, rows);
  EXPECT_EQ(os.str(), "step,length,k,d,rate,relative_distance\n1,6,3,2,1/2,1/3\n2,16,7,2,7/16,1/8\n");
}
