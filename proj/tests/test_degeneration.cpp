#include "support/fixtures.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace mukaikit;

namespace {

bool mentions(const std::vector<std::string>& failures, const std::string& needle) {
  for (const auto& f : failures)
    if (f.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST(ValidateFlag, QuarticInCp3) {
  auto v = validate_flag(fx::cp3_quartic());
  EXPECT_TRUE(v.valid);
  EXPECT_EQ(v.c1_c2, 24);
  EXPECT_EQ(v.c2_s, 24);
  EXPECT_EQ(v.gram, Matrix::from_rows({{4}}));
}

TEST(ValidateFlag, QuinticIsNotQuasiFano) {
  auto v = validate_flag(FlagDescriptor(fx::quintic(), {0}));
  EXPECT_FALSE(v.valid);
  EXPECT_TRUE(mentions(v.failures, "χ(O_Y) = 0 ≠ 1"));
  EXPECT_THROW(require_valid_flag(FlagDescriptor(fx::quintic(), {0})), ValidationError);
}

TEST(ValidateFlag, NonAnticanonicalSurface) {
  auto v = validate_flag(FlagDescriptor(fx::cp3(), {2}));
  EXPECT_FALSE(v.valid);
  EXPECT_TRUE(mentions(v.failures, "anticanonical"));
  EXPECT_TRUE(mentions(v.failures, "≠ 24"));
}

TEST(ValidateFlag, SyntheticRho2) { EXPECT_TRUE(validate_flag(fx::synthetic_rho2()).valid); }

TEST(ObstructionKernel, TrivialForRhoOne) {
  auto k = obstruction_kernel(fx::cp3_quartic());
  EXPECT_EQ(k.dimension, 0u);
  EXPECT_TRUE(k.basis.empty());
}

TEST(ObstructionKernel, DegenerateRho2) {
  auto k = obstruction_kernel(fx::synthetic_rho2());
  ASSERT_EQ(k.dimension, 1u);
  EXPECT_EQ(k.basis[0], (RationalVector{1, -2}));
}

TEST(ObstructionKernel, RejectsInvalidFlag) {
  EXPECT_THROW(obstruction_kernel(FlagDescriptor(fx::quintic(), {0})), ValidationError);
}

TEST(Gluing, RejectsNonIsometry) {
  auto f = fx::synthetic_rho2();
  EXPECT_THROW(GluingDescriptor(f, f, Matrix::from_rows({{0, 1}, {1, 0}})), ValidationError);
  EXPECT_THROW(GluingDescriptor(f, f, Matrix::identity(1)), ValidationError);
  EXPECT_THROW(GluingDescriptor(f, fx::cp3_quartic(), Matrix::identity(2)), ValidationError);
  EXPECT_THROW(GluingDescriptor(f, f, Matrix::identity(2), RationalVector{0}), ValidationError);
}

TEST(Gluing, DefaultSectionClass) {
  auto gd = build_double(fx::cp3_quartic());
  EXPECT_EQ(gd.section_class(), (RationalVector{8}));
  EXPECT_FALSE(gd.section_class_supplied());
  auto sw = fx::swap_rho2();
  GluingDescriptor g2(sw, sw, Matrix::from_rows({{0, 1}, {1, 0}}));
  EXPECT_EQ(g2.section_class(), (RationalVector{2, 2}));
}

TEST(JointKernel, PlainDoubleOfCp3) {
  auto k = joint_obstruction_kernel(build_double(fx::cp3_quartic()));
  ASSERT_EQ(k.dimension, 1u);
  EXPECT_EQ(k.basis[0], (RationalVector{1, -1}));
}

TEST(JointKernel, NondegenerateDoubleHasDiagonalKernel) {
  // For the identity gluing every pair (x, −x) lies in the kernel.
  auto k = joint_obstruction_kernel(build_double(fx::swap_rho2()));
  EXPECT_EQ(k.dimension, 2u);
  for (const auto& v : k.basis) {
    EXPECT_EQ(v[0], -v[2]);
    EXPECT_EQ(v[1], -v[3]);
  }
}

TEST(JointKernel, ExplicitCrossBlock) {
  Matrix g = Matrix::from_rows({{4}});
  EXPECT_EQ(joint_obstruction_kernel(g, g, Matrix::from_rows({{0}})).dimension, 0u);
  EXPECT_EQ(joint_obstruction_kernel(g, g, Matrix::from_rows({{4}})).dimension, 1u);
  EXPECT_THROW(joint_obstruction_kernel(g, g, Matrix::from_rows({{1, 2}})), ValidationError);
}

TEST(Smoothness, PlainDoubleIsSingular) {
  auto s = smooth_total_space(build_double(fx::cp3_quartic()));
  EXPECT_FALSE(s.smooth);
  EXPECT_EQ(s.section_square, Rational(256));
}

TEST(Smoothness, TrivialNormalProduct) {
  auto f = fx::cp3_quartic();
  auto s = smooth_total_space(GluingDescriptor(f, f, Matrix::identity(1), RationalVector{0}));
  EXPECT_TRUE(s.smooth);
  EXPECT_EQ(s.section_square, Rational(0));
}

TEST(DeformationDims, SmoothBody) {
  auto f = fx::cp3_quartic();
  GluingDescriptor gd(f, f, Matrix::identity(1), RationalVector{0});
  auto d = deformation_dims(gd, 3, 4);
  EXPECT_EQ(d.dimension, Rational(8));
  EXPECT_EQ(d.tag, DeformationTag::UnobstructedSmoothBody);
  EXPECT_FALSE(d.h0_section.has_value());
  EXPECT_THROW(deformation_dims(gd, -1, 0), ValidationError);
}

TEST(DeformationDims, SectionsOfNontrivialProduct) {
  auto gd = build_double(fx::cp3_quartic());
  auto d = deformation_dims(gd, 0, 0);
  EXPECT_EQ(d.tag, DeformationTag::GeneratedBySectionsAssumed);
  EXPECT_EQ(d.h0_source, "vanishing-assumed");
  EXPECT_EQ(*d.h0_section, Rational(130));  // 2 + 256/2
  EXPECT_EQ(d.dimension, Rational(129));
  auto user = deformation_dims(gd, 0, 0, BigInt(40));
  EXPECT_EQ(user.h0_source, "user-supplied");
  EXPECT_EQ(user.dimension, Rational(39));
}

TEST(DeformationDims, TagStrings) {
  EXPECT_EQ(to_string(DeformationTag::UnobstructedSmoothBody), "unobstructed-smooth-body");
  EXPECT_EQ(to_string(DeformationTag::GeneratedBySectionsAssumed), "generated-by-sections-assumed");
}

TEST(Double, InstantonSelfPairingVanishes) {
  auto gd = build_double(fx::cp3_quartic());
  EXPECT_EQ(double_self_pairing(gd, fx::instanton()), Rational(0));
  // the pieces: 2·χ_Y(E,E) = −8 and χ_S = −8
  EXPECT_EQ(euler_chi(fx::cp3(), fx::instanton(), fx::instanton()).value, Rational(-4));
}

TEST(Double, GluedPairingIsSkewOnRandomFlags) {
  gen::Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    auto f = gen::valid_flag(rng, gen::rho(rng));
    auto gd = build_double(f);
    auto e = gen::chern(rng, f.ring().rho()), g = gen::chern(rng, f.ring().rho());
    EXPECT_EQ(double_self_pairing(gd, e), Rational(0));
    EXPECT_EQ(glued_euler_pairing(gd, e, e, g, g), -glued_euler_pairing(gd, g, g, e, e));
  }
}

TEST(Double, MismatchedRestrictionsRejected) {
  auto gd = build_double(fx::cp3_quartic());
  EXPECT_THROW(glued_euler_pairing(gd, fx::line(1), fx::line(2), fx::line(0), fx::line(0)), ValidationError);
}

TEST(Involution, FixesAnticanonicalClass) {
  auto sw = fx::swap_rho2();
  EXPECT_TRUE(involution_fixes_anticanonical(sw, Matrix::from_rows({{0, 1}, {1, 0}})));
  EXPECT_TRUE(involution_fixes_anticanonical(sw, Matrix::identity(2)));
  EXPECT_FALSE(involution_fixes_anticanonical(sw, Matrix::from_rows({{-1, 0}, {0, -1}})));
  EXPECT_THROW(involution_fixes_anticanonical(sw, Matrix::from_rows({{1, 1}, {0, 1}})), ValidationError);
  EXPECT_THROW(involution_fixes_anticanonical(sw, Matrix::identity(1)), ValidationError);
}
