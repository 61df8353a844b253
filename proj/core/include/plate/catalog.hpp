#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plate/surface.hpp"

namespace plate {

using SurfaceParams = std::map<std::string, double>;

[[nodiscard]] ParametricSurface make_plane(Rect domain = {});
/// y = (l1 x1, l2 x2, 0).
[[nodiscard]] ParametricSurface make_uniform_stretch(double l1, double l2, Rect domain = {});
/// Isometric wrapping onto a cylinder of radius R with axis along x2.
[[nodiscard]] ParametricSurface make_cylinder(double R, Rect domain = {});
/// Graph of the lower spherical cap z = R − √(R² − |x|²).
[[nodiscard]] ParametricSurface make_sphere_cap(double R, Rect domain = {});
/// Graph z = a (x1² − x2²).
[[nodiscard]] ParametricSurface make_saddle(double a, Rect domain = {});
/// Area-preserving radial map onto the graph of A exp(−r²/s²).
[[nodiscard]] ParametricSurface make_gaussian_bump(double A, double s, Rect domain = {});
/// Area-preserving map onto a cone: radial stretch l1, hoop stretch 1/l1. Needs l1 ≥ 1.
[[nodiscard]] ParametricSurface make_cone(double l1, Rect domain = {0.1, 0.6, 0.1, 0.6});
/// Cylinder composed with the uniform stretch (l1 x1, x2 / l1).
[[nodiscard]] ParametricSurface make_stretched_cylinder(double R, double l1, Rect domain = {});

/// Builds a catalog surface by name. Missing parameters take their defaults;
/// unknown names or parameter keys throw ConfigError.
[[nodiscard]] ParametricSurface make_surface(const std::string& name, const SurfaceParams& params,
                                             std::optional<Rect> domain = std::nullopt);

struct CatalogEntry {
  std::string name;
  SurfaceParams defaults;
};

/// All catalog names with their default parameters.
[[nodiscard]] const std::vector<CatalogEntry>& surface_catalog();

}  // namespace plate
