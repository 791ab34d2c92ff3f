#include "selfdual/families.hpp"
#include "selfdual/varieties.hpp"

#include <gtest/gtest.h>

using namespace selfdual;

namespace {

std::array<Rational, 4> random4(Sampler& s) { return {s.scalar(), s.scalar(), s.scalar(), s.scalar()}; }

}  // namespace

TEST(RepTheory, EmbeddedIrreduciblesTransformCorrectly) {
  Sampler s(31);
  for (int k = 0; k < 100; ++k) {
    const Rational x1 = s.scalar(), x2 = s.scalar();
    const auto x = random4(s);
    const Vector12 v1 = u_two<Rational>(1, x), v2 = u_two<Rational>(2, x);
    for (const auto& g : Perm3::all()) {
      ASSERT_EQ(act(g, u_plus(x1, x2)), u_plus(x1, x2));
      ASSERT_EQ(act(g, u_minus(x1, x2)), Vector12(Rational(g.sign()) * u_minus(x1, x2)));
      const Matrix m = m2_table(g);
      ASSERT_EQ(act(g, v1), Vector12(m(0, 0) * v1 + m(0, 1) * v2));
      ASSERT_EQ(act(g, v2), Vector12(m(1, 0) * v1 + m(1, 1) * v2));
    }
  }
}

TEST(RepTheory, M2TableMatchesTheGenerators) {
  Matrix t13(2, 2), t23(2, 2);
  t13 << 1, -1, 0, -1;
  t23 << 0, 1, 1, 0;
  EXPECT_EQ(m2_table(Perm3::transposition(1, 3)), t13);
  EXPECT_EQ(m2_table(Perm3::transposition(2, 3)), t23);
  for (const auto& g : Perm3::all()) {
    EXPECT_EQ(m2_table(g).trace(), Rational(character(Irrep::standard, g)));
    for (const auto& h : Perm3::all()) EXPECT_EQ(m2_table(g * h), Matrix(m2_table(h) * m2_table(g)));
  }
}

TEST(RepTheory, ProjectorIdentities) {
  const Matrix& pp = isotypic_projector(Irrep::trivial);
  const Matrix& pm = isotypic_projector(Irrep::sign);
  const Matrix& p2 = isotypic_projector(Irrep::standard);
  EXPECT_EQ(Matrix(pp * pp), pp);
  EXPECT_EQ(Matrix(pm * pm), pm);
  EXPECT_EQ(Matrix(p2 * p2), p2);
  EXPECT_EQ(Matrix(pp + pm + p2), Matrix(Matrix::Identity(12, 12)));
  EXPECT_TRUE(is_zero(Matrix(pp * pm)));
  EXPECT_TRUE(is_zero(Matrix(pp * p2)));
  EXPECT_TRUE(is_zero(Matrix(pm * p2)));
  EXPECT_EQ(rank(pp), 2);
  EXPECT_EQ(rank(pm), 2);
  EXPECT_EQ(rank(p2), 8);
}

TEST(RepTheory, FreeModuleDecomposition) {
  const IsotypicDecomposition d = decompose(RelationSpace::whole());
  EXPECT_EQ(d.m_plus, 2);
  EXPECT_EQ(d.m_minus, 2);
  EXPECT_EQ(d.m_two, 4);
  EXPECT_EQ((character_multiplicities(RelationSpace::whole())), (std::array<Eigen::Index, 3>{2, 2, 4}));
}

TEST(RepTheory, SingleIrreducibles) {
  const IsotypicDecomposition plus = decompose(s3_closure(Matrix(u_plus<Rational>(1, 0))));
  EXPECT_EQ(plus.m_plus, 1);
  EXPECT_EQ(plus.m_minus + plus.m_two, 0);
  const IsotypicDecomposition two = decompose(s3_closure(Matrix(u_two<Rational>(1, {1, 0, 0, 0}))));
  EXPECT_EQ(two.m_two, 1);
  EXPECT_EQ(two.comp_two.dim(), 2);
}

TEST(RepTheory, ProjectorAndCharacterMultiplicitiesAgree) {
  Sampler s(32);
  for (int k = 0; k < 60; ++k) {
    const Eigen::Index rows = 1 + k % 4;
    const RelationSpace u = s3_closure(s.full_rank(rows, 12));
    const IsotypicDecomposition d = decompose(u);
    EXPECT_EQ(d.m_plus + d.m_minus + 2 * d.m_two, u.dim());
    EXPECT_EQ((character_multiplicities(u)), (std::array<Eigen::Index, 3>{d.m_plus, d.m_minus, d.m_two}));
  }
}

TEST(RepTheory, DecomposeRejectsNonInvariantInput) {
  Matrix e1 = Matrix::Zero(1, 12);
  e1(0, 0) = 1;
  EXPECT_THROW(decompose(RelationSpace(e1)), std::invalid_argument);
}

TEST(RepTheory, ParameterPlaneRoundTrip) {
  Sampler s(33);
  for (int k = 0; k < 20; ++k) {
    const Matrix plane = random_plane(s);
    const RelationSpace u = assemble_r34(k % 2 == 0, plane);
    const ParameterPlane extracted = extract_parameter_plane(decompose(u));
    EXPECT_TRUE(rowspace_equal(extracted.basis, plane));
    EXPECT_EQ(m2_component(extracted), m2_component(ParameterPlane{plane}));
  }
}

TEST(RepTheory, NovikovPlaneHasTheExpectedPluckerPoint) {
  const ParameterPlane plane = extract_parameter_plane(decompose(preset("novikov").space));
  EXPECT_EQ(plucker(plane), PluckerPoint({-1, 0, 1, 2, 3, 2}));
}

TEST(RepTheory, SegreLinesRoundTripUpToScale) {
  Sampler s(34);
  for (int k = 0; k < 20; ++k) {
    std::array<Rational, 2> sv{s.scalar(), s.nonzero_scalar()};
    std::array<Rational, 2> tv{s.nonzero_scalar(), s.scalar()};
    const SegreLines lines = extract_segre_lines(decompose(assemble_r5(sv, tv, random_plane(s))));
    EXPECT_EQ(lines.s[0] * sv[1], lines.s[1] * sv[0]);
    EXPECT_EQ(lines.t[0] * tv[1], lines.t[1] * tv[0]);
    EXPECT_EQ(lines.s[0] != 0 ? lines.s[0] : lines.s[1], Rational(1));
    EXPECT_EQ(lines.t[0] != 0 ? lines.t[0] : lines.t[1], Rational(1));
  }
}

TEST(RepTheory, SegreNormalization) {
  Matrix plane(2, 4);
  plane << 1, 0, 0, 0, 0, 1, 0, 0;
  const SegreLines lines = extract_segre_lines(decompose(assemble_r5({3, 3}, {0, 5}, plane)));
  EXPECT_EQ(lines.s, (std::array<Rational, 2>{1, 1}));
  EXPECT_EQ(lines.t, (std::array<Rational, 2>{0, 1}));
  EXPECT_THROW(extract_segre_lines(decompose(RelationSpace::whole())), std::invalid_argument);
}

TEST(RepTheory, AMatrixAntisymmetry) {
  Sampler s(35);
  for (int k = 0; k < 20; ++k) {
    const DualityParams p{s.scalar(), s.scalar()};
    EXPECT_TRUE(is_zero(a_matrix(1, 1, p)));
    EXPECT_TRUE(is_zero(a_matrix(2, 2, p)));
    EXPECT_EQ(a_matrix(1, 2, p), Matrix(-a_matrix(2, 1, p)));
  }
}
