#include <cmath>

#include <gtest/gtest.h>

#include "plate/catalog.hpp"
#include "plate/errors.hpp"
#include "plate/thickness_profile.hpp"

using namespace plate;

TEST(ThicknessProfile, IncompressibleCylinder) {
  const PolyProfile p = incompressible_profile(evaluate_jet(make_cylinder(1.0), Vec2(0.1, 0.2)));
  EXPECT_NEAR(p.alpha, 1.0, 1e-14);
  EXPECT_NEAR(p.beta, 0.5, 1e-14);
  EXPECT_NEAR(p.gamma, 0.5, 1e-14);
}

TEST(ThicknessProfile, IncompressibleNeedsUnitDet) {
  const SurfaceJet j = evaluate_jet(make_uniform_stretch(2.0, 1.0), Vec2::Zero());
  EXPECT_THROW((void)incompressible_profile(j), PreconditionError);
  const PolyProfile g = incompressible_profile_general(j);
  EXPECT_NEAR(g.alpha, 0.5, 1e-15);
  EXPECT_EQ(g.beta, 0.0);
}

TEST(ThicknessProfile, GeneralReducesToUnitDet) {
  const SurfaceJet j = evaluate_jet(make_gaussian_bump(0.1, 0.25), Vec2(0.05, 0.1));
  const PolyProfile a = incompressible_profile(j);
  const PolyProfile b = incompressible_profile_general(j);
  EXPECT_NEAR(a.alpha, b.alpha, 1e-12);
  EXPECT_NEAR(a.beta, b.beta, 1e-12);
  EXPECT_NEAR(a.gamma, b.gamma, 1e-12);
}

TEST(ThicknessProfile, CgStretchedPlane) {
  // det C = 2
  const SurfaceJet j = evaluate_jet(make_uniform_stretch(std::sqrt(2.0), 1.0), Vec2::Zero());
  const PolyProfile p = cg_profile(j, make_cg(1.0, 1.0));
  EXPECT_NEAR(p.alpha, std::sqrt(2.0 / 3.0), 1e-14);
  EXPECT_EQ(p.gamma, 0.0);
}

TEST(ThicknessProfile, CgIdentityIsUnitSlope) {
  const PolyProfile p = cg_profile(evaluate_jet(make_plane(), Vec2::Zero()), make_cg(0.3, 0.8));
  EXPECT_NEAR(p.alpha, 1.0, 1e-15);
  EXPECT_NEAR(p.beta, 0.0, 1e-15);
}

TEST(ThicknessProfile, SvkSlope) {
  EXPECT_NEAR(svk_slope(0.0, 1.0, 1.0, 0.1), 1.0, 1e-15);
  // λ = 0 drops the forcing but not the cosh
  EXPECT_NEAR(svk_slope(0.7, 0.0, 1.0, 0.1), 1.0 / std::cosh(0.14), 1e-15);
  EXPECT_LT(svk_slope(0.5, 1.0, 1.0, 0.1), 1.0);
}

TEST(ThicknessProfile, SvkSeriesMatchesHyperbolic) {
  const double H = -0.5, lambda = 1.3, mu = 0.8;
  HyperbolicProfile exact = svk_profile(H, lambda, mu, 0.01);
  ASSERT_FALSE(exact.series);
  HyperbolicProfile series = exact;
  series.series = true;
  for (double x3 : {-0.01, -0.005, 0.002, 0.01}) {
    EXPECT_NEAR(exact.value(x3), series.value(x3), 1e-11);
    EXPECT_NEAR(exact.d1(x3), series.d1(x3), 1e-9);
  }
  EXPECT_TRUE(svk_profile(1e-6, lambda, mu, 0.05).series);
}

TEST(ThicknessProfile, SvkSatisfiesFiberEquation) {
  const double H = -0.5, lambda = 2.0, mu = 1.0;
  const HyperbolicProfile p = svk_profile(H, lambda, mu, 0.1);
  const double bb = -lambda * H / (2.0 * mu + lambda);
  EXPECT_NEAR(p.beta_bar, bb, 1e-15);
  for (double x3 : {-0.1, 0.0, 0.03, 0.1}) {
    EXPECT_NEAR(p.d2(x3), 4.0 * H * H * p.value(x3) + 2.0 * bb, 1e-13);
  }
  EXPECT_NEAR(p.d1(0.0), svk_slope(H, lambda, mu, 0.1), 1e-15);
}

TEST(ThicknessProfile, DeformedThickness) {
  const double h = 0.1;
  EXPECT_NEAR(deformed_thickness(PolyProfile{}, h), 2.0 * h, 1e-15);
  EXPECT_NEAR(deformed_thickness(PolyProfile{1.0, 0.5, 0.5}, h), 2.0 * h + h * h * h, 1e-15);
}
