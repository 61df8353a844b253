#pragma once

#include <functional>
#include <string>
#include <vector>

#include "plate/profile_types.hpp"
#include "plate/surface.hpp"

namespace plate {

/// Builds the through-thickness profile at a point from its jet.
using ProfileField = std::function<ThicknessProfile(const SurfaceJet&)>;

/// Uniform sampling: nx × ny points spanning the domain (boundary included,
/// shrunk by the derivative margin) and n_fiber points on [−h, h].
struct OrientationGrid {
  int nx = 11;
  int ny = 11;
  int n_fiber = 21;
};

struct OrientationReport {
  double min_det_F = 0.0;
  Vec2 argmin_x = Vec2::Zero();
  double argmin_x3 = 0.0;
  int evaluated = 0;
  int nonpositive = 0;
  bool pass = false;
  /// Points where the jet or profile could not be built.
  std::vector<std::string> notes;
};

/// Minimum of det F over the grid and fiber, with F including the ν⊗∇φ term.
/// ∇φ comes from differences of the profile field in x (one-sided at the boundary).
/// Never throws for geometric failures; they are reported.
[[nodiscard]] OrientationReport verify_orientation(const ParametricSurface& surface,
                                                   const ProfileField& profile, double h,
                                                   const OrientationGrid& grid = {});

}  // namespace plate
