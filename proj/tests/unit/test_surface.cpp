#include <cmath>

#include <gtest/gtest.h>

#include "plate/catalog.hpp"
#include "plate/errors.hpp"
#include "plate/surface.hpp"

using namespace plate;

TEST(Surface, PlaneIsIdentity) {
  const SurfaceJet j = evaluate_jet(make_plane(), Vec2(0.2, -0.1));
  EXPECT_DOUBLE_EQ(j.trC, 2.0);
  EXPECT_DOUBLE_EQ(j.detC, 1.0);
  EXPECT_EQ(j.H, 0.0);
  EXPECT_EQ(j.K, 0.0);
  EXPECT_EQ(j.b1, 0.0);
  EXPECT_TRUE(j.umbilic);
}

TEST(Surface, UniformStretch) {
  const SurfaceJet j = evaluate_jet(make_uniform_stretch(2.0, 0.5), Vec2(0.1, 0.3));
  EXPECT_DOUBLE_EQ(j.lambda1, 2.0);
  EXPECT_DOUBLE_EQ(j.lambda2, 0.5);
  EXPECT_DOUBLE_EQ(j.trC, 4.25);
  EXPECT_DOUBLE_EQ(j.detC, 1.0);
  EXPECT_NEAR(j.r1(0), 1.0, 1e-15);
}

TEST(Surface, CylinderCurvatures) {
  for (double R : {1.0, 0.5, 3.0}) {
    const SurfaceJet j = evaluate_jet(make_cylinder(R), Vec2(0.17, -0.23));
    EXPECT_NEAR(j.H, -0.5 / R, 1e-14);
    EXPECT_NEAR(j.K, 0.0, 1e-14);
    EXPECT_NEAR(j.b1, -1.0 / R, 1e-14);
    EXPECT_NEAR(j.detC, 1.0, 1e-14);
  }
}

TEST(Surface, SphereCapApex) {
  const SurfaceJet j = evaluate_jet(make_sphere_cap(2.0), Vec2::Zero());
  EXPECT_NEAR(j.H, -0.5, 1e-14);
  EXPECT_NEAR(j.K, 0.25, 1e-14);
}

TEST(Surface, SphereCapIsUmbilicEverywhere) {
  const SurfaceJet j = evaluate_jet(make_sphere_cap(2.0), Vec2(0.3, -0.2));
  EXPECT_NEAR(j.K, 0.25, 1e-13);
  EXPECT_NEAR(j.H, -0.5, 1e-13);
}

TEST(Surface, SaddleAtOrigin) {
  const SurfaceJet j = evaluate_jet(make_saddle(0.5), Vec2::Zero());
  EXPECT_NEAR(j.H, 0.0, 1e-15);
  EXPECT_NEAR(j.K, -1.0, 1e-14);
}

TEST(Surface, BumpPreservesArea) {
  const ParametricSurface s = make_gaussian_bump(0.1, 0.25);
  for (const Vec2& x : {Vec2(0.13, 0.07), Vec2(-0.3, 0.2), Vec2(0.01, 0.0)}) {
    EXPECT_NEAR(evaluate_jet(s, x).detC, 1.0, 1e-13);
  }
}

TEST(Surface, ConeAndStretchedCylinderHaveConstantStretch) {
  const SurfaceJet c = evaluate_jet(make_cone(1.5), Vec2(0.3, 0.4));
  EXPECT_NEAR(c.lambda1, 1.5, 1e-13);
  EXPECT_NEAR(c.lambda2, 1.0 / 1.5, 1e-13);
  const SurfaceJet s = evaluate_jet(make_stretched_cylinder(1.0, 1.5), Vec2(0.1, 0.2));
  EXPECT_NEAR(s.lambda1, 1.5, 1e-13);
  EXPECT_NEAR(s.K, 0.0, 1e-13);
}

TEST(Surface, FiniteDifferenceModeAgrees) {
  const GeometryTolerances tol;
  for (const auto& e : surface_catalog()) {
    const ParametricSurface a = make_surface(e.name, e.defaults);
    const ParametricSurface f = a.with_mode(FiniteDifferenceDerivatives{});
    const Vec2 x = a.domain().center() + Vec2(0.13, 0.07);
    const SurfaceJet ja = evaluate_jet(a, x);
    const SurfaceJet jf = evaluate_jet(f, x);
    EXPECT_NEAR(ja.H, jf.H, tol.for_surface(f)) << e.name;
    EXPECT_NEAR(ja.K, jf.K, tol.for_surface(f)) << e.name;
    EXPECT_NEAR(ja.b1, jf.b1, tol.for_surface(f)) << e.name;
  }
}

TEST(Surface, OutsideDomainThrows) {
  EXPECT_THROW((void)evaluate_jet(make_plane(), Vec2(0.6, 0.0)), DomainError);
  const ParametricSurface f = make_plane().with_mode(FiniteDifferenceDerivatives{1e-3});
  EXPECT_THROW((void)evaluate_jet(f, Vec2(0.4995, 0.0)), DomainError);
  EXPECT_NO_THROW((void)evaluate_jet(make_plane(), Vec2(0.4995, 0.0)));
}

TEST(Surface, RankDeficientMapThrows) {
  Mat32 g = Mat32::Zero();
  g(0, 0) = 1.0;
  g(0, 1) = 2.0;
  EXPECT_THROW((void)assemble_jet(Vec2::Zero(), g, Hess32{Mat32::Zero(), Mat32::Zero()}), DegenerateImmersionError);
}

TEST(Surface, AppendixFormulasNeedUnitDeterminant) {
  const SurfaceJet j = evaluate_jet(make_saddle(0.5), Vec2(0.3, 0.2));
  EXPECT_THROW((void)appendix_H_K(j), PreconditionError);
  const SurfaceJet b = evaluate_jet(make_gaussian_bump(0.1, 0.25), Vec2(0.13, 0.07));
  const auto [H, K] = appendix_H_K(b);
  EXPECT_NEAR(H, b.H, 1e-12);
  EXPECT_NEAR(K, b.K, 1e-12);
}

TEST(Surface, PrincipalStretchesOrderedAndSigned) {
  Mat2 C;
  C << 1.0, 0.3, 0.3, 2.0;
  const StretchFrame f = principal_stretches(C);
  EXPECT_GE(f.lambda1, f.lambda2);
  EXPECT_GE(f.r1(0), 0.0);
  EXPECT_NEAR((C * f.r1 - f.lambda1 * f.lambda1 * f.r1).norm(), 0.0, 1e-14);
  EXPECT_NEAR(f.r1.dot(f.r2), 0.0, 1e-15);
  EXPECT_THROW((void)principal_stretches(Mat2::Zero()), DegenerateImmersionError);
}

TEST(Surface, NoAnalyticDerivativesMeansFiniteDifferences) {
  const ParametricSurface s("map", Rect{}, [](const Vec2& x) { return Vec3(x(0), x(1), x(0) * x(1)); });
  EXPECT_FALSE(s.is_analytic());
  EXPECT_THROW((void)s.with_mode(AnalyticDerivatives{}), PreconditionError);
  const SurfaceJet j = evaluate_jet(s, Vec2::Zero());
  EXPECT_NEAR(j.K, -1.0, 1e-6);
}

TEST(Catalog, RejectsUnknownNamesAndKeys) {
  EXPECT_THROW((void)make_surface("torus", {}), ConfigError);
  EXPECT_THROW((void)make_surface("cylinder", {{"radius", 1.0}}), ConfigError);
  EXPECT_THROW((void)make_surface("sphere_cap", {{"R", 0.5}}), ConfigError);
  EXPECT_NO_THROW((void)make_surface("sphere_cap", {{"R", 2.0}}));
}
