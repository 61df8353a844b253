#include "plate/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "plate/errors.hpp"
#include "plate/verification.hpp"

namespace plate {

namespace {

using nlohmann::json;

const std::vector<std::string> kSweepParams = {"h", "Jm", "lambda1", "quad_order"};
const std::vector<std::string> kObservables = {"w_s",           "w_b",          "oracle_energy",
                                               "reduced_energy", "energy_gap",   "detcf_residual",
                                               "gent_nh_gap",   "strain_norm",  "w1_quadratic_gap"};

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError((path.empty() ? "config" : path) + ": expected an object");
}

void check_keys(const json& j, const std::string& path, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) {
      throw ConfigError(join(path, key) + ": unknown key");
    }
  }
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ConfigError(path + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(path + ": must be finite");
  return x;
}

int integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ConfigError(path + ": expected an integer");
  return v.get<int>();
}

std::string text(const json& v, const std::string& path) {
  if (!v.is_string()) throw ConfigError(path + ": expected a string");
  return v.get<std::string>();
}

double number_or(const json& j, const std::string& key, const std::string& path, double fallback) {
  return j.contains(key) ? number(j.at(key), join(path, key)) : fallback;
}

std::string describe(double x) {
  return fmt::format("{}", x);
}

SurfaceSpec parse_surface(const json& j) {
  require_object(j, "surface");
  check_keys(j, "surface", {"name", "params", "domain"});
  if (!j.contains("name")) throw ConfigError("surface.name: required");
  SurfaceSpec s;
  s.name = text(j.at("name"), "surface.name");
  if (j.contains("params")) {
    require_object(j.at("params"), "surface.params");
    for (const auto& [key, value] : j.at("params").items()) {
      s.params[key] = number(value, "surface.params." + key);
    }
  }
  if (j.contains("domain")) {
    const json& d = j.at("domain");
    if (!d.is_array() || d.size() != 4) throw ConfigError("surface.domain: expected [x1_min, x1_max, x2_min, x2_max]");
    Rect r{number(d[0], "surface.domain[0]"), number(d[1], "surface.domain[1]"), number(d[2], "surface.domain[2]"),
           number(d[3], "surface.domain[3]")};
    if (!(r.x1_max > r.x1_min) || !(r.x2_max > r.x2_min)) throw ConfigError("surface.domain: empty rectangle");
    s.domain = r;
  }
  try {
    (void)make_surface(s.name, s.params, s.domain);
  } catch (const ConfigError& e) {
    throw ConfigError(std::string("surface: ") + e.what());
  } catch (const Error& e) {
    throw ConfigError(std::string("surface: ") + e.what());
  }
  return s;
}

MaterialModel parse_material(const json& j) {
  const std::string path = "material";
  require_object(j, path);
  if (!j.contains("model")) throw ConfigError("material.model: required");
  const std::string model = text(j.at("model"), "material.model");
  MaterialModel m;
  try {
    if (model == "gent") {
      check_keys(j, path, {"model", "mu", "Jm"});
      m = Gent{number_or(j, "mu", path, 1.0), number_or(j, "Jm", path, 10.0)};
    } else if (model == "neo_hookean") {
      check_keys(j, path, {"model", "mu"});
      m = NeoHookean{number_or(j, "mu", path, 1.0)};
    } else if (model == "mooney_rivlin") {
      check_keys(j, path, {"model", "mu", "chi"});
      m = MooneyRivlin{number_or(j, "mu", path, 1.0), number_or(j, "chi", path, 1.0)};
    } else if (model == "ciarlet_geymonat") {
      check_keys(j, path, {"model", "a", "b", "c", "d", "lambda", "mu"});
      const bool lame = j.contains("lambda") || j.contains("mu");
      if (lame && (j.contains("a") || j.contains("b"))) {
        throw ConfigError("material: give either (a, b) or (lambda, mu), not both");
      }
      CiarletGeymonat cg = lame ? make_cg_lame(number_or(j, "lambda", path, 1.0), number_or(j, "mu", path, 1.0))
                                : make_cg(number_or(j, "a", path, 0.5), number_or(j, "b", path, 0.25));
      if (j.contains("c") || j.contains("d")) {
        cg = make_cg_checked(cg.a, cg.b, number_or(j, "c", path, cg.c), number_or(j, "d", path, cg.d));
      }
      m = cg;
    } else if (model == "svk") {
      check_keys(j, path, {"model", "lambda", "mu"});
      m = SVK{number_or(j, "lambda", path, 1.0), number_or(j, "mu", path, 1.0)};
    } else {
      throw ConfigError("material.model: unknown model '" + model + "'");
    }
    validate(m);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string("material: ") + e.what());
  }
  return m;
}

GridSpec parse_grid(const json& j) {
  require_object(j, "grid");
  check_keys(j, "grid", {"nx", "ny", "order"});
  GridSpec g;
  if (j.contains("nx")) g.nx = integer(j.at("nx"), "grid.nx");
  if (j.contains("ny")) g.ny = integer(j.at("ny"), "grid.ny");
  if (j.contains("order")) g.order = integer(j.at("order"), "grid.order");
  if (g.nx < 2) throw ConfigError("grid.nx: must be at least 2");
  if (g.ny < 2) throw ConfigError("grid.ny: must be at least 2");
  if (g.order < 1) throw ConfigError("grid.order: must be at least 1");
  return g;
}

SweepSpec parse_sweep(const json& j) {
  require_object(j, "sweep");
  check_keys(j, "sweep", {"param", "values", "observables", "point"});
  SweepSpec s;
  if (!j.contains("param")) throw ConfigError("sweep.param: required");
  s.param = text(j.at("param"), "sweep.param");
  if (std::find(kSweepParams.begin(), kSweepParams.end(), s.param) == kSweepParams.end()) {
    throw ConfigError("sweep.param: unknown sweep parameter '" + s.param + "' (expected h, Jm, lambda1 or quad_order)");
  }
  if (!j.contains("values") || !j.at("values").is_array() || j.at("values").empty()) {
    throw ConfigError("sweep.values: expected a non-empty array");
  }
  for (std::size_t i = 0; i < j.at("values").size(); ++i) {
    s.values.push_back(number(j.at("values")[i], "sweep.values[" + std::to_string(i) + "]"));
  }
  if (j.contains("observables")) {
    const json& o = j.at("observables");
    if (!o.is_array()) throw ConfigError("sweep.observables: expected an array");
    for (std::size_t i = 0; i < o.size(); ++i) {
      const std::string name = text(o[i], "sweep.observables[" + std::to_string(i) + "]");
      if (std::find(kObservables.begin(), kObservables.end(), name) == kObservables.end()) {
        throw ConfigError("sweep.observables: unknown observable '" + name + "'");
      }
      s.observables.push_back(name);
    }
  }
  if (j.contains("point")) {
    const json& p = j.at("point");
    if (!p.is_array() || p.size() != 2) throw ConfigError("sweep.point: expected [x1, x2]");
    s.point = Vec2(number(p[0], "sweep.point[0]"), number(p[1], "sweep.point[1]"));
  }
  return s;
}

VerifySpec parse_verify(const json& j) {
  require_object(j, "verify");
  check_keys(j, "verify", {"checks", "beta_perturbation"});
  VerifySpec v;
  if (j.contains("checks")) {
    if (!j.at("checks").is_array()) throw ConfigError("verify.checks: expected an array");
    for (std::size_t i = 0; i < j.at("checks").size(); ++i) {
      const std::string id = text(j.at("checks")[i], "verify.checks[" + std::to_string(i) + "]");
      (void)find_criterion(id);
      v.checks.push_back(id);
    }
  }
  if (v.checks.empty()) throw ConfigError("verify.checks: empty check selection");
  v.beta_perturbation = number_or(j, "beta_perturbation", "verify", 0.0);
  return v;
}

}  // namespace

RunConfig parse_config(const json& j) {
  require_object(j, "");
  check_keys(j, "",
             {"surface", "material", "h", "grid", "derivative_mode", "fd_step", "quad_order", "tolerances", "sweep",
              "verify"});
  RunConfig c;
  const bool verify_only = j.contains("verify");
  for (const char* key : {"surface", "material", "h"}) {
    if (!verify_only && !j.contains(key)) throw ConfigError(std::string(key) + ": required");
  }
  if (j.contains("surface")) c.surface = parse_surface(j.at("surface"));
  if (j.contains("material")) c.material = parse_material(j.at("material"));
  if (j.contains("h")) {
    c.h = number(j.at("h"), "h");
    if (!(c.h > 0.0)) throw ConfigError("h: must be positive (got " + describe(c.h) + ")");
  }
  if (j.contains("grid")) c.grid = parse_grid(j.at("grid"));

  const std::string mode = j.contains("derivative_mode") ? text(j.at("derivative_mode"), "derivative_mode") : "analytic";
  if (mode == "analytic") {
    if (j.contains("fd_step")) throw ConfigError("fd_step: only valid with derivative_mode finite_difference");
    c.derivative_mode = AnalyticDerivatives{};
  } else if (mode == "finite_difference") {
    FiniteDifferenceDerivatives fd;
    fd.step = number_or(j, "fd_step", "", fd.step);
    if (!(fd.step > 0.0)) throw ConfigError("fd_step: must be positive");
    c.derivative_mode = fd;
  } else {
    throw ConfigError("derivative_mode: expected 'analytic' or 'finite_difference'");
  }

  if (j.contains("quad_order")) {
    c.quad_order = integer(j.at("quad_order"), "quad_order");
    if (c.quad_order < 1) throw ConfigError("quad_order: must be at least 1");
  }
  if (j.contains("tolerances")) {
    require_object(j.at("tolerances"), "tolerances");
    for (const auto& [key, value] : j.at("tolerances").items()) {
      c.tolerances[key] = number(value, "tolerances." + key);
    }
    VerifyTolerances probe;
    try {
      probe.apply(c.tolerances);
    } catch (const ConfigError& e) {
      throw ConfigError(std::string("tolerances: ") + e.what());
    }
  }
  if (j.contains("sweep")) c.sweep = parse_sweep(j.at("sweep"));
  if (j.contains("verify")) c.verify = parse_verify(j.at("verify"));
  return c;
}

RunConfig parse_config_text(const std::string& text_in) {
  json j;
  try {
    j = json::parse(text_in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(j);
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

json to_json(const MaterialModel& m) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Gent>) {
          return {{"model", "gent"}, {"mu", v.mu}, {"Jm", v.Jm}};
        } else if constexpr (std::is_same_v<T, NeoHookean>) {
          return {{"model", "neo_hookean"}, {"mu", v.mu}};
        } else if constexpr (std::is_same_v<T, MooneyRivlin>) {
          return {{"model", "mooney_rivlin"}, {"mu", v.mu}, {"chi", v.chi}};
        } else if constexpr (std::is_same_v<T, CiarletGeymonat>) {
          return {{"model", "ciarlet_geymonat"}, {"a", v.a}, {"b", v.b}, {"c", v.c}, {"d", v.d}};
        } else {
          return {{"model", "svk"}, {"lambda", v.lambda}, {"mu", v.mu}};
        }
      },
      m);
}

json to_json(const RunConfig& c) {
  json j;
  json s = {{"name", c.surface.name}, {"params", json::object()}};
  for (const auto& [k, v] : c.surface.params) s["params"][k] = v;
  if (c.surface.domain) {
    const Rect& r = *c.surface.domain;
    s["domain"] = {r.x1_min, r.x1_max, r.x2_min, r.x2_max};
  }
  j["surface"] = s;
  j["material"] = to_json(c.material);
  j["h"] = c.h;
  j["grid"] = {{"nx", c.grid.nx}, {"ny", c.grid.ny}, {"order", c.grid.order}};
  if (const auto* fd = std::get_if<FiniteDifferenceDerivatives>(&c.derivative_mode)) {
    j["derivative_mode"] = "finite_difference";
    j["fd_step"] = fd->step;
  } else {
    j["derivative_mode"] = "analytic";
  }
  j["quad_order"] = c.quad_order;
  j["tolerances"] = json::object();
  for (const auto& [k, v] : c.tolerances) j["tolerances"][k] = v;
  if (c.sweep) {
    json sw = {{"param", c.sweep->param}, {"values", c.sweep->values}};
    if (!c.sweep->observables.empty()) sw["observables"] = c.sweep->observables;
    if (c.sweep->point) sw["point"] = {(*c.sweep->point)(0), (*c.sweep->point)(1)};
    j["sweep"] = sw;
  }
  if (c.verify) {
    j["verify"] = {{"checks", c.verify->checks}, {"beta_perturbation", c.verify->beta_perturbation}};
  }
  return j;
}

ParametricSurface build_surface(const RunConfig& c) {
  ParametricSurface s = make_surface(c.surface.name, c.surface.params, c.surface.domain);
  if (std::holds_alternative<FiniteDifferenceDerivatives>(c.derivative_mode)) s = s.with_mode(c.derivative_mode);
  return s;
}

}  // namespace plate
