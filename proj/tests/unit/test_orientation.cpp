#include <gtest/gtest.h>

#include "plate/catalog.hpp"
#include "plate/errors.hpp"
#include "plate/orientation.hpp"
#include "plate/thickness_profile.hpp"

using namespace plate;

namespace {
ThicknessProfile general(const SurfaceJet& j) { return incompressible_profile_general(j); }
}  // namespace

TEST(Orientation, PlaneIsOrientationPreserving) {
  const OrientationReport r = verify_orientation(make_plane(), general, 0.1);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.min_det_F, 1.0, 1e-12);
  EXPECT_EQ(r.evaluated, 11 * 11 * 21);
}

TEST(Orientation, ThinCylinderPasses) {
  EXPECT_TRUE(verify_orientation(make_cylinder(1.0), general, 0.05).pass);
}

TEST(Orientation, ThickCylinderIsFlagged) {
  const OrientationReport r = verify_orientation(make_cylinder(1.0), general, 0.9);
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.nonpositive, 0);
  EXPECT_LE(r.min_det_F, 0.0);
}

TEST(Orientation, ProfileErrorsBecomeNotes) {
  const ProfileField strict = [](const SurfaceJet& j) -> ThicknessProfile { return incompressible_profile(j); };
  const OrientationReport r = verify_orientation(make_uniform_stretch(2.0, 1.0), strict, 0.1, {3, 3, 3});
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.notes.size(), 9u);
}

TEST(Orientation, RejectsBadInput) {
  EXPECT_THROW((void)verify_orientation(make_plane(), general, 0.0), DomainError);
  EXPECT_THROW((void)verify_orientation(make_plane(), general, 0.1, {1, 3, 3}), DomainError);
}
