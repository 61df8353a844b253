#include <cmath>
#include <numbers>
#include <string>

#include <gtest/gtest.h>

#include "plate/catalog.hpp"
#include "plate/errors.hpp"
#include "plate/reduced_energy.hpp"
#include "plate/thickness_profile.hpp"

using namespace plate;

TEST(Gent, CylinderBendingIsFourThirds) {
  const SurfaceJet j = evaluate_jet(make_cylinder(1.0), Vec2(0.2, 0.1));
  const EnergyContents e = gent_contents(j, 1.0, 10.0);
  EXPECT_EQ(e.formula_id, formula::gent_unit_det);
  EXPECT_NEAR(e.stretching, 0.0, 1e-14);
  EXPECT_NEAR(e.bending, 4.0 / 3.0, 1e-13);
  EXPECT_NEAR(gent_bending_isometric(1.0, j.H), 4.0 / 3.0, 1e-15);
}

TEST(Gent, StretchingMatchesReducedFormula) {
  const SurfaceJet j = evaluate_jet(make_uniform_stretch(1.5, 1.0 / 1.5), Vec2::Zero());
  const EnergyContents e = gent_contents(j, 2.0, 5.0);
  EXPECT_NEAR(e.stretching, gent_stretching_reduced(2.0, 5.0, 1.5), 1e-14);
  EXPECT_EQ(e.bending, 0.0);
}

TEST(Gent, BranchesAgreeOnUnitDet) {
  const SurfaceJet j = evaluate_jet(make_gaussian_bump(0.1, 0.25), Vec2(0.08, -0.05));
  const EnergyContents u = gent_contents_unit_det(j, 1.0, 7.0);
  const EnergyContents g = gent_contents_general(j, 1.0, 7.0);
  EXPECT_NEAR(u.stretching, g.stretching, 1e-11);
  EXPECT_NEAR(u.bending, g.bending, 1e-11);
  EXPECT_EQ(gent_contents(evaluate_jet(make_uniform_stretch(1.2, 1.0), Vec2::Zero()), 1.0, 7.0).formula_id,
            formula::gent_general_det);
}

TEST(Gent, LargeJmApproachesNeoHookean) {
  const SurfaceJet j = evaluate_jet(make_stretched_cylinder(1.0, 1.3), Vec2(0.1, 0.0));
  const EnergyContents nh = neo_hookean_contents(j, 1.0);
  const EnergyContents g = gent_contents(j, 1.0, 1e7);
  EXPECT_NEAR(g.stretching, nh.stretching, 1e-6);
  EXPECT_NEAR(g.bending, nh.bending, 1e-6);
}

TEST(Gent, StiffeningLimit) {
  const SurfaceJet j = evaluate_jet(make_uniform_stretch(2.0, 0.5), Vec2::Zero());
  EXPECT_THROW((void)gent_contents(j, 1.0, 2.0), AdmissibilityError);
  EXPECT_NO_THROW((void)gent_contents(j, 1.0, 3.0));
}

TEST(CiarletGeymonat, ClosedFormsMatchParametrizations) {
  const SurfaceJet j = evaluate_jet(make_saddle(0.5), Vec2(0.2, 0.3));
  const double lambda = 1.7, mu = 0.6;
  const CiarletGeymonat m = make_cg_lame(lambda, mu);
  EXPECT_NEAR(cg_w1_closed(j, m), cg_w1_lame(j, lambda, mu), 1e-12);
  EXPECT_NEAR(cg_w3_closed(j, m), cg_w3_lame(j, lambda, mu), 1e-12);
  const EnergyContents e = cg_contents(j, m);
  EXPECT_NEAR(e.stretching, cg_w1_closed(j, m), 1e-12);
  EXPECT_NEAR(e.bending, cg_w3_closed(j, m), 1e-10);
}

TEST(CiarletGeymonat, PreformIsMinimalAtClosedFormBeta) {
  const SurfaceJet j = evaluate_jet(make_sphere_cap(2.0), Vec2(0.1, 0.2));
  const CiarletGeymonat m = make_cg(0.7, 0.4);
  const double beta = cg_profile(j, m).beta;
  const double w = cg_w3_preform(j, m, beta);
  for (double d : {1e-3, -1e-3, 1e-2}) EXPECT_GT(cg_w3_preform(j, m, beta + d), w);
  EXPECT_NEAR(w, cg_w3_closed(j, m), 1e-10);
}

TEST(CiarletGeymonat, PlaneCostsNothing) {
  const EnergyContents e = cg_contents(evaluate_jet(make_plane(), Vec2::Zero()), make_cg(1.0, 1.0));
  EXPECT_NEAR(e.stretching, 0.0, 1e-15);
  EXPECT_NEAR(e.bending, 0.0, 1e-15);
}

TEST(Svk, CylinderBending) {
  const EnergyContents e = svk_content(-0.5, 0.0, 1.0, 1.0);
  EXPECT_NEAR(e.bending, 8.0 / 9.0, 1e-15);
  EXPECT_EQ(e.stretching, 0.0);
  EXPECT_EQ(e.formula_id, formula::svk_isometry);
}

TEST(Svk, NeedsIsometry) {
  const SurfaceJet j = evaluate_jet(make_uniform_stretch(1.2, 1.0 / 1.2), Vec2::Zero());
  EXPECT_THROW((void)material_contents(j, SVK{}), PreconditionError);
}

TEST(Coupling, StationaryAnglesAreStationary) {
  const double k1 = 1.0, k2 = -0.4, l1 = 1.4;
  const auto angles = coupling_stationary_angles(k1, k2, l1);
  ASSERT_EQ(angles.size(), 3u);
  EXPECT_EQ(angles.front(), 0.0);
  EXPECT_DOUBLE_EQ(angles.back(), std::numbers::pi / 2.0);
  const double a = angles[1];
  const double e = 1e-6;
  const double slope = (eigenframe_coupling(k1, k2, l1, a + e) - eigenframe_coupling(k1, k2, l1, a - e)) / (2 * e);
  EXPECT_NEAR(slope, 0.0, 1e-8);
}

TEST(Coupling, UnstretchedHasNoCoupling) {
  EXPECT_EQ(eigenframe_coupling(1.0, 2.0, 1.0, 0.3), 0.0);
  EXPECT_EQ(coupling_stationary_angles(0.0, 0.0, 1.3).size(), 2u);
}

TEST(Integrate, PlaneIsZero) {
  const IntegratedEnergy e = integrate_contents(make_plane(), Gent{}, 0.05, AreaGrid{3, 3, 4});
  EXPECT_EQ(e.total, 0.0);
}

TEST(Integrate, CylinderTotal) {
  const double h = 0.05;
  const ParametricSurface s = make_cylinder(1.0);
  const IntegratedEnergy e = integrate_contents(s, Gent{}, h, AreaGrid{2, 2, 4});
  EXPECT_NEAR(e.total_stretch, 0.0, 1e-15);
  EXPECT_NEAR(e.total_bend, 4.0 / 3.0 * s.domain().area(), 1e-13);
  EXPECT_DOUBLE_EQ(e.total, h * e.total_stretch + h * h * h * e.total_bend);
}

TEST(Integrate, AdmissibilityErrorNamesThePoint) {
  try {
    (void)integrate_contents(make_uniform_stretch(2.0, 0.5), Gent{1.0, 2.0}, 0.01, AreaGrid{1, 1, 2});
    FAIL() << "expected AdmissibilityError";
  } catch (const AdmissibilityError& e) {
    EXPECT_NE(std::string(e.what()).find("at x = ("), std::string::npos);
  }
}

TEST(Integrate, MooneyRivlinHasNoClosedForm) {
  EXPECT_THROW((void)integrate_contents(make_plane(), MooneyRivlin{}, 0.01, AreaGrid{1, 1, 2}),
               PreconditionError);
}
