#include "selfdual/families.hpp"

#include <gtest/gtest.h>

using namespace selfdual;

TEST(Perm3, CompositionTableIsExhaustive) {
  const auto& all = Perm3::all();
  for (const auto& g : all) {
    for (const auto& h : all) {
      const Perm3 gh = g * h;
      for (int x = 1; x <= 3; ++x) EXPECT_EQ(gh(x), g(h(x)));
      EXPECT_EQ(gh.sign(), g.sign() * h.sign());
      EXPECT_EQ(action_matrix(gh), Matrix(action_matrix(g) * action_matrix(h)))
          << g.to_string() << " * " << h.to_string();
    }
    EXPECT_EQ(g * g.inverse(), Perm3::identity());
  }
}

TEST(Perm3, NamesAndValidation) {
  EXPECT_EQ(Perm3::transposition(1, 3).to_string(), "(13)");
  EXPECT_EQ(Perm3({2, 3, 1}).to_string(), "(123)");
  EXPECT_EQ(Perm3().to_string(), "()");
  EXPECT_THROW(Perm3({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Perm3::transposition(2, 2), std::invalid_argument);
}

TEST(FreeOperad, BasisIsBuiltFromCosetRepresentatives) {
  EXPECT_EQ(act_on_basis(Perm3::transposition(1, 2), 0), 1);
  EXPECT_EQ(act_on_basis(Perm3::transposition(1, 2), 2), 3);
  for (Eigen::Index i = 0; i < 4; ++i) {
    EXPECT_EQ(act_on_basis(Perm3::transposition(1, 3), i), 4 + i);
    EXPECT_EQ(act_on_basis(Perm3::transposition(2, 3), i), 8 + i);
  }
}

TEST(FreeOperad, SigmaIsTheSignedDiagonal) {
  const Matrix s = sigma();
  const int d[] = {1, -1, -1, 1, -1, 1, 1, -1, -1, 1, 1, -1};
  for (Eigen::Index i = 0; i < 12; ++i)
    for (Eigen::Index j = 0; j < 12; ++j) EXPECT_EQ(s(i, j), i == j ? Rational(d[i]) : Rational(0));
}

TEST(FreeOperad, GammaComposesLikeTheGeneratorMaps) {
  Sampler s(21);
  for (int k = 0; k < 20; ++k) {
    const Rational a = s.scalar(), b = s.scalar(), c = s.scalar(), d = s.scalar();
    EXPECT_EQ(Matrix(gamma<Rational>(a, b) * gamma<Rational>(c, d)), gamma<Rational>(a * c + b * d, a * d + b * c));
  }
}

TEST(FreeOperad, GammaDeterminant) {
  Sampler s(22);
  for (int k = 0; k < 20; ++k) {
    const Rational a = s.scalar(), b = s.scalar();
    Rational expected(1);
    for (int i = 0; i < 12; ++i) expected *= (a - b) * (a + b);
    EXPECT_EQ(determinant(gamma<Rational>(a, b)), expected);
  }
}

TEST(FreeOperad, PairingIsSignTwistedInvariant) {
  const Matrix m = gamma<Rational>(Rational(2), Rational(7)) * sigma();
  for (const auto& g : Perm3::all()) {
    const Matrix p = action_matrix(g);
    EXPECT_EQ(Matrix(p.transpose() * m * p), Matrix(Rational(g.sign()) * m)) << g.to_string();
  }
}

TEST(FreeOperad, KoszulComplementExamples) {
  Matrix units = Matrix::Zero(6, 12);
  for (Eigen::Index i = 0; i < 6; ++i) units(i, i) = 1;
  const RelationSpace perp = koszul_complement(RelationSpace(units));
  Matrix expected = Matrix::Zero(6, 12);
  for (Eigen::Index i = 0; i < 6; ++i) expected(i, 6 + i) = 1;
  EXPECT_EQ(perp.basis(), expected);
  EXPECT_EQ(koszul_complement(RelationSpace()).dim(), 12);
  EXPECT_EQ(koszul_complement(RelationSpace::whole()).dim(), 0);
}

TEST(FreeOperad, KoszulComplementIsAnInvolution) {
  Sampler s(23);
  for (Eigen::Index k = 1; k <= 11; ++k) {
    for (int rep = 0; rep < 5; ++rep) {
      const RelationSpace u = random_subspace(k, s);
      const RelationSpace perp = koszul_complement(u);
      EXPECT_EQ(perp.dim(), 12 - k);
      EXPECT_EQ(koszul_complement(perp), u);
    }
  }
}

TEST(FreeOperad, ClosureAndInvariance) {
  Matrix e1 = Matrix::Zero(1, 12);
  e1(0, 0) = 1;
  const RelationSpace u(e1);
  ASSERT_TRUE(invariance_violation(u).has_value());
  EXPECT_EQ(invariance_violation(u)->to_string(), "(12)");
  const RelationSpace closed = s3_closure(e1);
  EXPECT_TRUE(is_invariant(closed));
  EXPECT_EQ(closed.dim(), 6);
  EXPECT_TRUE(is_invariant(RelationSpace::whole()));
}

TEST(FreeOperad, VerifyDualityPreconditions) {
  Sampler s(2);
  EXPECT_THROW(verify_duality(random_subspace(5, s), {1, 0}), std::invalid_argument);
  const RelationSpace six = random_subspace(6, s);
  EXPECT_THROW(verify_duality(six, {1, 1}), std::invalid_argument);
  EXPECT_THROW(verify_duality(six, {2, -2}), std::invalid_argument);
}

TEST(FreeOperad, GramVanishesExactlyWhenDualityHolds) {
  Sampler s(24);
  for (int k = 0; k < 30; ++k) {
    const ClassLabel labels[] = {ClassLabel::Y1, ClassLabel::Y2, ClassLabel::X3, ClassLabel::X4};
    const RelationSpace u = random_member(labels[k % 4], s);
    const Certificate c = classify_selfdual(u);
    ASSERT_TRUE(c.self_dual);
    EXPECT_TRUE(is_zero(duality_gram(u, *c.witness)));
    EXPECT_TRUE(verify_duality(u, *c.witness));
  }
  const RelationSpace junk = random_subspace(6, s);
  EXPECT_FALSE(verify_duality(junk, {1, 0}));
  EXPECT_FALSE(is_zero(duality_gram(junk, {1, 0})));
}
