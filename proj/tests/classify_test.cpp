#include "selfdual/families.hpp"
#include "selfdual/varieties.hpp"

#include <gtest/gtest.h>

using namespace selfdual;

namespace {

bool has(const std::vector<ClassLabel>& classes, ClassLabel c) {
  return std::find(classes.begin(), classes.end(), c) != classes.end();
}

Matrix plane(std::initializer_list<int> row1, std::initializer_list<int> row2) {
  Matrix m(2, 4);
  int j = 0;
  for (int v : row1) m(0, j++) = v;
  j = 0;
  for (int v : row2) m(1, j++) = v;
  return m;
}

}  // namespace

TEST(Classify, PluckerOfCoordinatePlane) {
  const PluckerPoint p = plucker({plane({1, 0, 0, 0}, {0, 1, 0, 0})});
  const std::array<Rational, 6> expected{1, 0, 0, 0, 0, 0};
  EXPECT_EQ(p.coords(), expected);
  EXPECT_EQ(p.relation(), 0);
  EXPECT_THROW(plucker({plane({1, 2, 0, 0}, {2, 4, 0, 0})}), std::invalid_argument);
}

TEST(Classify, PluckerIsProjectiveInvariantOfThePlane) {
  Sampler s(71);
  for (int k = 0; k < 50; ++k) {
    const Matrix m = random_plane(s);
    const Matrix g = s.invertible(2);
    const PluckerPoint p = plucker({m});
    EXPECT_EQ(plucker({Matrix(g * m)}), p);
    EXPECT_EQ(p.relation(), 0);
  }
}

TEST(Classify, SegreScaling) {
  const SegrePoint z = segre({2, 4}, {3, -3});
  const std::array<Rational, 4> expected{1, -1, 2, -2};
  EXPECT_EQ(z.coords(), expected);
  EXPECT_EQ(segre({Rational(1, 3), Rational(2, 3)}, {-7, 7}), z);
  EXPECT_EQ(z.relation(), 0);
  EXPECT_THROW(segre({0, 0}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(ProjectivePoint<3>({0, 0, 0}), std::invalid_argument);
}

TEST(Classify, MembershipExamples) {
  // p13 = p24 only.
  const PluckerPoint y1({1, 2, 0, 5, 2, Rational(5, 2)});
  EXPECT_EQ(membership(y1, std::nullopt), std::vector<ClassLabel>{ClassLabel::Y1});
  // p14 = p12 + p23 only.
  const PluckerPoint y2({-1, 0, 1, 2, 3, 2});
  EXPECT_EQ(membership(y2, std::nullopt), std::vector<ClassLabel>{ClassLabel::Y2});
  EXPECT_TRUE(membership(PluckerPoint({1, 1, 0, 0, 0, 0}), std::nullopt).empty());

  const PluckerPoint both({1, 1, 1, 0, 1, 1});
  const SegrePoint z({1, -1, -1, 1});
  EXPECT_EQ(membership(both, z), (std::vector<ClassLabel>{ClassLabel::X3, ClassLabel::X4}));
  // U1 point: p12 = 0, p13 = p14 = p23 = p24.
  const PluckerPoint u1({0, 1, 1, 1, 1, 3});
  EXPECT_TRUE(plane_loci(u1).u1);
  EXPECT_TRUE(has(membership(u1, SegrePoint({3, 1, 0, 0})), ClassLabel::X1));
  // On z11^2 + z22^2 = z12^2 + z21^2 the X1 condition drops out.
  EXPECT_FALSE(has(membership(u1, SegrePoint({1, 1, 1, 1})), ClassLabel::X1));
}

TEST(Classify, WitnessRules) {
  EXPECT_EQ(witness({ClassLabel::Y1}, std::nullopt).a, 1);
  EXPECT_EQ(witness({ClassLabel::Y2}, std::nullopt).b, 1);
  const DualityParams x34 = witness({ClassLabel::X3, ClassLabel::X4}, SegrePoint({1, -1, -1, 1}));
  EXPECT_EQ(x34.a, 1);
  EXPECT_EQ(x34.b, 0);
  const DualityParams x1 = witness({ClassLabel::X1}, SegrePoint({3, 1, 0, 0}));
  EXPECT_EQ(x1.a, Rational(1, 3));
  EXPECT_EQ(x1.b, 1);
  EXPECT_THROW(witness({}, std::nullopt), std::invalid_argument);
}

TEST(Classify, ResidualVanishesOnFamilies) {
  Sampler s(72);
  for (int k = 0; k < 20; ++k) {
    EXPECT_TRUE(is_zero(sdu_residual({plane_y1(s)}, {1, 0})));
    EXPECT_TRUE(is_zero(sdu_residual({plane_y2(s)}, {0, 1})));
    const DualityParams p{s.scalar(), s.scalar()};
    EXPECT_TRUE(is_zero(sdu_residual({plane_u1(s)}, p)));
    EXPECT_TRUE(is_zero(sdu_residual({plane_u2(s)}, p)));
  }
}

TEST(Classify, RandomMembersOfY1Y2X3X4AreSelfDual) {
  Sampler s(73);
  for (auto label : {ClassLabel::Y1, ClassLabel::Y2, ClassLabel::X3, ClassLabel::X4}) {
    for (int k = 0; k < 10; ++k) {
      const RelationSpace u = random_member(label, s);
      const Certificate c = classify_selfdual(u);
      ASSERT_TRUE(c.self_dual) << to_string(label) << ": " << c.reason;
      EXPECT_TRUE(has(c.classes, label));
      EXPECT_TRUE(c.verified);
      EXPECT_TRUE(verify_duality(u, *c.witness));
    }
  }
}

// Generic (U1)/(U2) points: the two pairing orders cannot both vanish.
TEST(Classify, GenericX1X2PointsAreNotSelfDual) {
  Sampler s(74);
  for (auto label : {ClassLabel::X1, ClassLabel::X2}) {
    for (int k = 0; k < 10; ++k) {
      const RelationSpace u = random_member(label, s);
      const Certificate c = classify_selfdual(u);
      ASSERT_TRUE(has(c.classes, label));
      if (has(c.classes, ClassLabel::X3) || has(c.classes, ClassLabel::X4)) {
        EXPECT_TRUE(c.self_dual);
        continue;
      }
      EXPECT_FALSE(c.self_dual);
      EXPECT_NE(c.reason.find("X1/X2"), std::string::npos);
      for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
          if (a * a != b * b) EXPECT_FALSE(verify_duality(u, {a, b}));
    }
  }
}

TEST(Classify, NegativeFamilies) {
  Sampler s(75);
  for (int k = 0; k < 10; ++k) {
    const Certificate r1 = classify_selfdual(random_r1(s));
    EXPECT_FALSE(r1.self_dual);
    EXPECT_EQ(r1.repr.tag, ReprTag::R1);
    const Certificate r2 = classify_selfdual(random_r2(s));
    EXPECT_FALSE(r2.self_dual);
    EXPECT_EQ(r2.repr.tag, ReprTag::R2);
    const Certificate off = classify_selfdual(random_r34_nonmember(s));
    EXPECT_FALSE(off.self_dual);
    EXPECT_TRUE(off.classes.empty());
  }
}

TEST(Classify, RejectsWrongDimensionAndNonInvariant) {
  Sampler s(76);
  EXPECT_NE(classify_selfdual(random_subspace(5, s)).reason.find("dim"), std::string::npos);
  const Certificate c = classify_selfdual(RelationSpace(Matrix::Identity(6, 12)));
  EXPECT_FALSE(c.self_dual);
  EXPECT_NE(c.reason.find("not S3-invariant"), std::string::npos);
}

TEST(Classify, IndependentOfBasisPresentation) {
  Sampler s(77);
  for (auto label : {ClassLabel::Y1, ClassLabel::Y2, ClassLabel::X3, ClassLabel::X4}) {
    const RelationSpace u = random_member(label, s);
    const Certificate ref = classify_selfdual(u);
    for (int k = 0; k < 5; ++k) {
      const Certificate c = classify_selfdual(RelationSpace(recombine(u, s)));
      EXPECT_EQ(c.classes, ref.classes);
      EXPECT_EQ(c.plucker, ref.plucker);
      EXPECT_EQ(c.segre, ref.segre);
      EXPECT_EQ(c.witness->a, ref.witness->a);
      EXPECT_EQ(c.witness->b, ref.witness->b);
    }
  }
}

TEST(Classify, ReprTypes) {
  EXPECT_EQ(repr_type({2, 2, 1, {}, {}, {}}).tag, ReprTag::R1);
  EXPECT_EQ(repr_type({0, 0, 3, {}, {}, {}}).tag, ReprTag::R2);
  EXPECT_EQ(repr_type({2, 0, 2, {}, {}, {}}).tag, ReprTag::R3);
  EXPECT_EQ(repr_type({0, 2, 2, {}, {}, {}}).tag, ReprTag::R4);
  EXPECT_EQ(repr_type({1, 1, 2, {}, {}, {}}).tag, ReprTag::R5);
  EXPECT_EQ(repr_type({1, 1, 1, {}, {}, {}}).tag, ReprTag::other);
  for (int k = 0; k < 6; ++k) {
    const auto label = static_cast<ClassLabel>(k);
    EXPECT_EQ(parse_class_label(to_string(label)), label);
  }
}
