#include <cmath>

#include <gtest/gtest.h>

#include "plate/catalog.hpp"
#include "plate/errors.hpp"
#include "plate/materials.hpp"
#include "plate/thickness_profile.hpp"

using namespace plate;

TEST(Materials, Names) {
  EXPECT_EQ(material_name(Gent{}), "gent");
  EXPECT_EQ(material_name(NeoHookean{}), "neo_hookean");
  EXPECT_EQ(material_name(MooneyRivlin{}), "mooney_rivlin");
  EXPECT_EQ(material_name(CiarletGeymonat{}), "ciarlet_geymonat");
  EXPECT_EQ(material_name(SVK{}), "svk");
}

TEST(Materials, Validation) {
  EXPECT_THROW(validate(Gent{-1.0, 10.0}), DomainError);
  EXPECT_THROW(validate(Gent{1.0, 0.0}), DomainError);
  EXPECT_THROW(validate(MooneyRivlin{1.0, 1.5}), DomainError);
  EXPECT_THROW(validate(CiarletGeymonat{1.0, 1.0, 3.0, -4.0}), DomainError);
  EXPECT_NO_THROW(validate(make_cg(1.0, 1.0)));
  EXPECT_THROW(validate(SVK{0.0, 1.0}), DomainError);
}

TEST(Materials, CgConstantMapAndLame) {
  const CiarletGeymonat m = make_cg_lame(3.0, 2.0);
  EXPECT_DOUBLE_EQ(m.a, 1.0);
  EXPECT_DOUBLE_EQ(m.b, 0.75);
  EXPECT_DOUBLE_EQ(m.c, 3.5);
  EXPECT_DOUBLE_EQ(m.d, -3.75);
  const Lame l = lame(m);
  EXPECT_DOUBLE_EQ(l.lambda, 3.0);
  EXPECT_DOUBLE_EQ(l.mu, 2.0);
  EXPECT_THROW((void)make_cg_checked(1.0, 1.0, 4.0, -4.1), DomainError);
}

TEST(Materials, ReferenceStateHasZeroEnergy) {
  const Invariants id = principal_invariants(Mat3::Identity());
  EXPECT_DOUBLE_EQ(id.I1, 3.0);
  EXPECT_DOUBLE_EQ(id.I2, 3.0);
  EXPECT_DOUBLE_EQ(id.I3, 1.0);
  for (const MaterialModel& m :
       {MaterialModel{Gent{}}, MaterialModel{NeoHookean{}}, MaterialModel{MooneyRivlin{1.0, 0.7}},
        MaterialModel{make_cg(0.7, 0.4)}, MaterialModel{SVK{}}}) {
    EXPECT_NEAR(volumetric_energy(m, id, Mat3::Identity()), 0.0, 1e-15) << material_name(m);
  }
}

TEST(Materials, GentApproachesNeoHookean) {
  // I1 = 5.25 from the principal stretches (2, 1/2, 1).
  const Invariants inv{5.25, 0.0, 1.0};
  const double nh = volumetric_energy(NeoHookean{1.0}, inv);
  const double d1 = std::abs(volumetric_energy(Gent{1.0, 1e8}, inv) - nh);
  const double d2 = std::abs(volumetric_energy(Gent{1.0, 2e8}, inv) - nh);
  EXPECT_LE(d1, 3e-8);
  EXPECT_NEAR(d1 / d2, 2.0, 1e-3);
}

TEST(Materials, AdmissibilityErrors) {
  EXPECT_THROW((void)volumetric_energy(Gent{1.0, 1.0}, Invariants{4.5, 0.0, 1.0}), AdmissibilityError);
  EXPECT_THROW((void)volumetric_energy(make_cg(1.0, 1.0), Invariants{3.0, 3.0, 0.0}), AdmissibilityError);
  EXPECT_THROW((void)volumetric_energy(SVK{}, Invariants{3.0, 3.0, 1.0}), AdmissibilityError);
}

TEST(Materials, SvkUsesSquareRoot) {
  const Mat3 C = Vec3(4.0, 1.0, 0.25).asDiagonal();
  // √C − I = diag(1, 0, −1/2): (λ/2)(1/2)² + μ(1 + 1/4)
  EXPECT_NEAR(volumetric_energy(SVK{2.0, 1.0}, principal_invariants(C), C), 0.25 + 1.25, 1e-14);
  Mat3 A;
  A << 2.0, 0.3, 0.1, 0.3, 1.5, -0.2, 0.1, -0.2, 1.0;
  const Mat3 S = sqrt_spd(A);
  EXPECT_NEAR((S * S - A).norm(), 0.0, 1e-13);
}

TEST(Materials, SmallStrainMatchesLinearization) {
  Mat3 E0;
  E0 << 1.0, 0.2, 0.0, 0.2, -0.5, 0.3, 0.0, 0.3, 0.4;
  const CiarletGeymonat m = make_cg_lame(1.0, 1.0);
  const double eps = 1e-4;
  const Mat3 E = eps * E0;
  const double W = volumetric_energy(m, principal_invariants(Mat3::Identity() + 2.0 * E));
  EXPECT_NEAR(W / small_strain_energy(m, E), 1.0, 1e-3);
}

TEST(Materials, MolecularParameters) {
  const auto [mu, Jm] = molecular_params(2.0, 11.0, 1.5, 300.0);
  EXPECT_DOUBLE_EQ(mu, 900.0);
  EXPECT_DOUBLE_EQ(Jm, 30.0);
  EXPECT_THROW((void)molecular_params(1.0, 1.0, 1.0, 1.0), DomainError);
}

TEST(Materials, SeriesMatchesExactInvariants) {
  const ParametricSurface s = make_sphere_cap(2.0);
  const SurfaceJet jet = evaluate_jet(s, Vec2(0.2, -0.1));
  const PolyProfile p{0.9, 0.2, 0.1};
  const InvariantSeries series = invariant_series(jet, p);
  // I1 keeps all its terms through x3²; the remainder of all three is O(x3³).
  for (double x3 : {1e-2, 5e-3}) {
    const Invariants ex = series.exact(x3);
    const Invariants tr = series.at(x3);
    EXPECT_LE(std::abs(ex.I1 - tr.I1), 50.0 * x3 * x3 * x3);
    EXPECT_LE(std::abs(ex.I2 - tr.I2), 50.0 * x3 * x3 * x3);
    EXPECT_LE(std::abs(ex.I3 - tr.I3), 50.0 * x3 * x3 * x3);
  }
  const double r1 = std::abs(series.exact(1e-2).I3 - series.at(1e-2).I3);
  const double r2 = std::abs(series.exact(5e-3).I3 - series.at(5e-3).I3);
  EXPECT_NEAR(std::log2(r1 / r2), 3.0, 0.2);
}

TEST(Materials, IncompressibleCylinderIsCubic) {
  const SurfaceJet jet = evaluate_jet(make_cylinder(1.0), Vec2::Zero());
  const PolyProfile p = incompressible_profile(jet);
  const auto residual = [&](double x3) { return std::abs(exact_invariants(jet, p.value(x3), p.d1(x3)).inv.I3 - 1.0); };
  EXPECT_NEAR(std::log2(residual(2e-3) / residual(1e-3)), 3.0, 0.05);
}

TEST(Materials, DeformationGradientWithNormalGradient) {
  const SurfaceJet jet = evaluate_jet(make_plane(), Vec2::Zero());
  const Mat3 F = deformation_gradient(jet, 0.1, 1.0, Vec2(0.5, 0.0));
  EXPECT_DOUBLE_EQ(F(2, 0), 0.5);
  EXPECT_DOUBLE_EQ(F.determinant(), 1.0);
  EXPECT_THROW((void)exact_invariants(jet, 0.0, 0.0), DegenerateDeformationError);
}
