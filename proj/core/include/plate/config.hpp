#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "plate/catalog.hpp"
#include "plate/materials.hpp"
#include "plate/surface.hpp"

namespace plate {

struct SurfaceSpec {
  std::string name = "plane";
  SurfaceParams params;
  std::optional<Rect> domain;
};

/// Area quadrature: nx × ny cells with `order` Gauss points per cell and axis.
struct GridSpec {
  int nx = 8;
  int ny = 8;
  int order = 4;
};

struct SweepSpec {
  std::string param;  // h, Jm, lambda1 or quad_order
  std::vector<double> values;
  std::vector<std::string> observables;  // empty: the defaults for `param`
  std::optional<Vec2> point;             // empty: domain center
};

struct VerifySpec {
  std::vector<std::string> checks;
  double beta_perturbation = 0.0;  // test hook, see VerifyOptions
};

struct RunConfig {
  SurfaceSpec surface;
  MaterialModel material = Gent{};
  double h = 0.01;
  GridSpec grid;
  DerivativeMode derivative_mode = AnalyticDerivatives{};
  int quad_order = 16;
  std::map<std::string, double> tolerances;
  std::optional<SweepSpec> sweep;
  std::optional<VerifySpec> verify;
};

/// Strict parsing: unknown keys, wrong types and out-of-range values throw
/// ConfigError naming the offending field. `surface`, `material` and `h` are
/// required unless the config only drives `verify`.
[[nodiscard]] RunConfig parse_config(const nlohmann::json& j);
[[nodiscard]] RunConfig parse_config_text(const std::string& text);
[[nodiscard]] RunConfig load_config(const std::filesystem::path& path);

/// Canonical form; parse_config(to_json(c)) reproduces c.
[[nodiscard]] nlohmann::json to_json(const RunConfig& c);
[[nodiscard]] nlohmann::json to_json(const MaterialModel& m);

/// Catalog surface with the configured domain and derivative mode.
[[nodiscard]] ParametricSurface build_surface(const RunConfig& c);

}  // namespace plate
