#include "plate/orientation.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "plate/errors.hpp"
#include "plate/materials.hpp"

namespace plate {

OrientationReport verify_orientation(const ParametricSurface& surface, const ProfileField& profile,
                                     double h, const OrientationGrid& grid) {
  if (!(h > 0.0)) throw DomainError("half thickness h must be positive");
  if (grid.nx < 2 || grid.ny < 2 || grid.n_fiber < 2) {
    throw DomainError("orientation grid needs at least 2 samples per direction");
  }
  const double margin = surface.required_margin();
  const Rect d = surface.domain();
  const Rect inner{d.x1_min + margin, d.x1_max - margin, d.x2_min + margin, d.x2_max - margin};
  const double delta = 1e-5 * std::max(inner.x1_max - inner.x1_min, inner.x2_max - inner.x2_min);

  auto profile_at = [&](const Vec2& x) { return profile(evaluate_jet(surface, x)); };

  OrientationReport rep;
  rep.min_det_F = std::numeric_limits<double>::infinity();
  for (int iy = 0; iy < grid.ny; ++iy) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      const Vec2 x(inner.x1_min + (inner.x1_max - inner.x1_min) * ix / (grid.nx - 1),
                   inner.x2_min + (inner.x2_max - inner.x2_min) * iy / (grid.ny - 1));
      try {
        const SurfaceJet jet = evaluate_jet(surface, x);
        const ThicknessProfile p0 = profile(jet);
        // neighbours for ∇φ, one-sided where x ± δ leaves the domain
        std::array<ThicknessProfile, 2> lo{p0, p0}, hi{p0, p0};
        std::array<double, 2> span{};
        for (int i = 0; i < 2; ++i) {
          Vec2 e = Vec2::Zero();
          e(i) = delta;
          const bool has_hi = inner.contains(x + e);
          const bool has_lo = inner.contains(x - e);
          if (has_hi) hi[i] = profile_at(x + e);
          if (has_lo) lo[i] = profile_at(x - e);
          span[i] = delta * ((has_hi ? 1.0 : 0.0) + (has_lo ? 1.0 : 0.0));
        }
        for (int k = 0; k < grid.n_fiber; ++k) {
          const double x3 = -h + 2.0 * h * k / (grid.n_fiber - 1);
          Vec2 grad_phi;
          for (int i = 0; i < 2; ++i) {
            grad_phi(i) = (profile_value(hi[i], x3) - profile_value(lo[i], x3)) / span[i];
          }
          const Mat3 F = deformation_gradient(jet, profile_value(p0, x3), profile_d1(p0, x3), grad_phi);
          const double det = F.determinant();
          ++rep.evaluated;
          if (!(det > 0.0)) ++rep.nonpositive;
          if (det < rep.min_det_F) {
            rep.min_det_F = det;
            rep.argmin_x = x;
            rep.argmin_x3 = x3;
          }
        }
      } catch (const Error& e) {
        std::ostringstream os;
        os << "(" << x(0) << ", " << x(1) << "): " << e.what();
        rep.notes.push_back(os.str());
      }
    }
  }
  rep.pass = rep.nonpositive == 0 && rep.notes.empty() && rep.evaluated > 0;
  return rep;
}

}  // namespace plate
