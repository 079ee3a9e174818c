#include <gtest/gtest.h>

#include "support.hpp"

using namespace gqc;
using namespace gqc::testing;

namespace {

// Trace of the multiplication-by-e matrix in the power basis.
Elem matrix_trace(const Field& E, Elem e) {
  const Field B = E.base();
  Elem acc = 0;
  Elem basis = 1;
  for (int i = 0; i < E.degree(); ++i) {
    const auto col = FieldElement(E, E.mul(e, basis)).coefficients();
    acc = B.add(acc, col[static_cast<std::size_t>(i)]);
    basis = E.mul(basis, E.generator());
  }
  return acc;
}

std::vector<Field> small_extensions() {
  return {F4(), make_extension(F2(), {1, 1, 1, 1, 1}), make_extension(F2(), {1, 0, 0, 1, 0, 0, 1}),
          make_extension(F3(), {2, 2, 1}), make_extension(F5(), {2, 1, 1}),
          make_extension(F4(), find_irreducible(F4(), 2)), make_extension(F2(), find_irreducible(F2(), 8))};
}

}  // namespace

TEST(Extension, QuadraticOverF2) {
  const Field E = make_extension(F2(), {1, 1, 1});
  EXPECT_EQ(E.size(), 4u);
  const FieldElement a = generator_of(E);
  EXPECT_EQ(a * a, a + FieldElement(E, 1));
}

TEST(Extension, DegreeOneIsBaseField) {
  const Field E = make_extension(F2(), {1, 1});
  EXPECT_EQ(E.size(), 2u);
  EXPECT_EQ(E.generator(), 1u);
}

TEST(Extension, Sextic) { EXPECT_EQ(make_extension(F2(), {1, 0, 0, 1, 0, 0, 1}).size(), 64u); }

TEST(Extension, RejectsReducibleNamingFactor) {
  try {
    make_extension(F2(), {1, 0, 1});
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("divisible by x+1"), std::string::npos) << e.what();
  }
  try {
    make_extension(F2(), {1, 0, 1, 0, 1});  // (x^2+x+1)^2, no roots
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("divisible by x^2+x+1"), std::string::npos) << e.what();
  }
}

TEST(Extension, RejectsNonMonic) { EXPECT_THROW(make_extension(F3(), {1, 1, 2}), std::invalid_argument); }

TEST(Extension, ModulusHasAlphaAsRoot) {
  for (const auto& E : small_extensions()) {
    std::vector<Elem> mod(E.modulus().begin(), E.modulus().end());
    EXPECT_EQ(detail::peval(E, mod, E.generator()), 0u) << E.name();
  }
}

TEST(Arith, BasicIdentities) {
  EXPECT_EQ(F2().add(1, 1), 0u);
  const Field E = make_extension(F2(), {1, 1, 1, 1, 1});
  Elem acc = 1;
  for (int i = 0; i < 5; ++i) acc = E.mul(acc, E.generator());
  EXPECT_EQ(acc, 1u);
  EXPECT_EQ(E.multiplicative_order(E.generator()), 5u);
}

TEST(Arith, Errors) {
  EXPECT_THROW(F3().inv(0), DivisionByZero);
  EXPECT_THROW(FieldElement(F4(), 1) / FieldElement(F4(), 0), DivisionByZero);
  EXPECT_THROW(FieldElement(F4(), 1) + FieldElement(F2(), 1), std::domain_error);
  EXPECT_THROW(FieldElement(F4(), 4), std::out_of_range);
}

TEST(Arith, FieldAxiomsRandomized) {
  Rng rng(11);
  for (const auto& E : small_extensions()) {
    for (int t = 0; t < 200; ++t) {
      const Elem a = random_elem(rng, E), b = random_elem(rng, E), c = random_elem(rng, E);
      EXPECT_EQ(E.mul(a, E.add(b, c)), E.add(E.mul(a, b), E.mul(a, c)));
      EXPECT_EQ(E.mul(E.mul(a, b), c), E.mul(a, E.mul(b, c)));
      EXPECT_EQ(E.add(a, E.neg(a)), 0u);
      if (a != 0) {
        EXPECT_EQ(E.mul(a, E.inv(a)), 1u);
        EXPECT_EQ((E.size() - 1) % E.multiplicative_order(a), 0u);
      }
      const auto p = E.characteristic();
      EXPECT_EQ(E.pow(E.add(a, b), p), E.add(E.pow(a, p), E.pow(b, p)));
    }
  }
}

TEST(Arith, GenericPathMatchesTables) {
  // F_{2^17} is past the table limit and exercises schoolbook multiplication.
  const Field big = Field::unchecked_extension(F2(), find_irreducible(F2(), 17));
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const Elem a = 1 + rng() % (big.size() - 1);
    EXPECT_EQ(big.mul(a, big.inv(a)), 1u);
    EXPECT_EQ(big.pow(a, big.size() - 1), 1u);
  }
}

TEST(Trace, QuadraticExamples) {
  const Field E = F4();
  EXPECT_EQ(trace(E, E.generator(), F2()), 1u);
  EXPECT_EQ(trace(E, 1, F2()), 0u);
}

TEST(Trace, F16GeneratorAgainstMatrixTrace) {
  const Field E = make_extension(F2(), {1, 1, 1, 1, 1});
  EXPECT_EQ(trace(E, E.generator(), F2()), 1u);
  EXPECT_EQ(matrix_trace(E, E.generator()), 1u);
}

TEST(Trace, MatchesMatrixTraceEverywhere) {
  for (const auto& E : small_extensions()) {
    if (E.size() > 256) continue;
    for (Elem e = 0; e < E.size(); ++e) ASSERT_EQ(trace(E, e, E.base()), matrix_trace(E, e)) << E.name() << " e=" << e;
  }
}

TEST(Trace, LinearAndSurjective) {
  for (const auto& E : small_extensions()) {
    if (E.size() > 256) continue;
    const Field B = E.base();
    std::vector<bool> hit(B.size(), false);
    for (Elem a = 0; a < E.size(); ++a) {
      hit[trace(E, a, B)] = true;
      for (Elem c = 0; c < B.size(); ++c) {
        const Elem b = (a * 7 + c) % E.size();
        EXPECT_EQ(trace(E, E.add(E.mul(c, a), b), B), B.add(B.mul(c, trace(E, a, B)), trace(E, b, B)));
      }
    }
    for (bool h : hit) EXPECT_TRUE(h) << E.name();
  }
}

TEST(Trace, TowerTransitivity) {
  const Field E = make_extension(F4(), find_irreducible(F4(), 2));
  for (Elem e = 0; e < E.size(); ++e) EXPECT_EQ(trace(E, e, F2()), trace(F4(), trace(E, e, F4()), F2()));
  EXPECT_THROW(trace(E, 1, F3()), std::domain_error);
}

TEST(Hermitian, Examples) {
  const Field E = F4();
  EXPECT_EQ(hermitian_conj(E, E.generator()), E.add(E.generator(), 1));
  EXPECT_EQ(hermitian_conj(F2(), 1), 1u);
  EXPECT_EQ(hermitian_conj(make_extension(F2(), {1, 1}), 1), 1u);
  EXPECT_THROW(hermitian_conj(make_extension(F2(), {1, 1, 0, 1}), 2), std::domain_error);
}

TEST(Hermitian, InvolutiveAutomorphismOverF4) {
  const Field E = make_extension(F4(), find_irreducible(F4(), 2));
  ASSERT_EQ(E.size(), 16u);
  for (Elem a = 0; a < E.size(); ++a) {
    EXPECT_EQ(hermitian_conj(E, hermitian_conj(E, a)), a);
    for (Elem b = 0; b < E.size(); ++b) {
      EXPECT_EQ(hermitian_conj(E, E.mul(a, b)), E.mul(hermitian_conj(E, a), hermitian_conj(E, b)));
      EXPECT_EQ(hermitian_conj(E, E.add(a, b)), E.add(hermitian_conj(E, a), hermitian_conj(E, b)));
    }
  }
}

TEST(Hermitian, FixedFieldIsBase) {
  for (const auto& E : small_extensions()) {
    if (E.degree() % 2 || E.size() > 256) continue;
    std::size_t fixed = 0;
    for (Elem a = 0; a < E.size(); ++a) fixed += hermitian_conj(E, a) == a;
    EXPECT_EQ(fixed * fixed, E.size()) << E.name();
  }
}

TEST(MapByGenerator, InverseRootIsomorphism) {
  // F_2[x]/(x^3+x+1) and F_2[x]/(x^3+x^2+1): alpha'' -> alpha'^{-1} is a field map.
  const Field H1 = make_extension(F2(), {1, 1, 0, 1});
  const Field H2 = make_extension(F2(), {1, 0, 1, 1});
  const Elem img = H1.inv(H1.generator());
  for (Elem a = 0; a < 8; ++a)
    for (Elem b = 0; b < 8; ++b)
      EXPECT_EQ(map_by_generator(H2, H2.mul(a, b), H1, img),
                H1.mul(map_by_generator(H2, a, H1, img), map_by_generator(H2, b, H1, img)));
}
