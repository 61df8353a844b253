#include <filesystem>
#include <string>

#include <gtest/gtest.h>

#include "plate/config.hpp"
#include "plate/errors.hpp"

using namespace plate;
using nlohmann::json;

namespace {
json base() {
  return json::parse(R"({
    "surface": {"name": "cylinder", "params": {"R": 1.0}},
    "material": {"model": "gent", "mu": 1.0, "Jm": 10.0},
    "h": 0.01
  })");
}

std::string message_for(const json& j) {
  try {
    (void)parse_config(j);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}
}  // namespace

TEST(Config, MinimalParses) {
  const RunConfig c = parse_config(base());
  EXPECT_EQ(c.surface.name, "cylinder");
  EXPECT_DOUBLE_EQ(std::get<Gent>(c.material).Jm, 10.0);
  EXPECT_DOUBLE_EQ(c.h, 0.01);
  EXPECT_EQ(c.quad_order, 16);
  EXPECT_TRUE(std::holds_alternative<AnalyticDerivatives>(c.derivative_mode));
}

TEST(Config, NegativeHNamesTheField) {
  json j = base();
  j["h"] = -0.1;
  EXPECT_EQ(message_for(j), "h: must be positive (got -0.1)");
}

TEST(Config, UnknownKeysRejected) {
  json j = base();
  j["thickness"] = 0.1;
  EXPECT_NE(message_for(j).find("thickness"), std::string::npos);
  j = base();
  j["material"]["lambda"] = 1.0;
  EXPECT_NE(message_for(j).find("material.lambda"), std::string::npos);
}

TEST(Config, RequiredFields) {
  json j = base();
  j.erase("material");
  EXPECT_EQ(message_for(j), "material: required");
  EXPECT_NO_THROW((void)parse_config(json::parse(R"({"verify": {"checks": ["codazzi"]}})")));
}

TEST(Config, WrongTypes) {
  json j = base();
  j["h"] = "small";
  EXPECT_EQ(message_for(j), "h: expected a number");
  j = base();
  j["quad_order"] = 4.5;
  EXPECT_EQ(message_for(j), "quad_order: expected an integer");
}

TEST(Config, MaterialParameterChecks) {
  json j = base();
  j["material"] = {{"model", "ciarlet_geymonat"}, {"a", 1.0}, {"mu", 1.0}};
  EXPECT_NE(message_for(j).find("not both"), std::string::npos);
  j["material"] = {{"model", "ciarlet_geymonat"}, {"a", 1.0}, {"b", 1.0}, {"c", 4.0}, {"d", -3.0}};
  EXPECT_FALSE(message_for(j).empty());
  j["material"] = {{"model", "ciarlet_geymonat"}, {"lambda", 2.0}, {"mu", 1.0}};
  const auto cg = std::get<CiarletGeymonat>(parse_config(j).material);
  EXPECT_DOUBLE_EQ(cg.a, 0.5);
  EXPECT_DOUBLE_EQ(cg.b, 0.5);
  j["material"] = {{"model", "gent"}, {"Jm", -1.0}};
  EXPECT_EQ(message_for(j).rfind("material: ", 0), 0u);
  j["material"] = {{"model", "rubber"}};
  EXPECT_NE(message_for(j).find("unknown model"), std::string::npos);
}

TEST(Config, SurfaceChecks) {
  json j = base();
  j["surface"]["name"] = "torus";
  EXPECT_EQ(message_for(j).rfind("surface: ", 0), 0u);
  j = base();
  j["surface"]["domain"] = {0.0, -1.0, 0.0, 1.0};
  EXPECT_EQ(message_for(j), "surface.domain: empty rectangle");
}

TEST(Config, SweepAndVerifyChecks) {
  json j = base();
  j["sweep"] = {{"param", "temperature"}, {"values", {1.0}}};
  EXPECT_NE(message_for(j).find("unknown sweep parameter"), std::string::npos);
  j["sweep"] = {{"param", "h"}, {"values", json::array()}};
  EXPECT_FALSE(message_for(j).empty());
  j["sweep"] = {{"param", "h"}, {"values", {0.01}}, {"observables", {"color"}}};
  EXPECT_NE(message_for(j).find("unknown observable"), std::string::npos);
  EXPECT_EQ(message_for(json::parse(R"({"verify": {"checks": []}})")), "verify.checks: empty check selection");
  EXPECT_FALSE(message_for(json::parse(R"({"verify": {"checks": ["no_such_check"]}})")).empty());
}

TEST(Config, DerivativeMode) {
  json j = base();
  j["fd_step"] = 1e-3;
  EXPECT_FALSE(message_for(j).empty());
  j["derivative_mode"] = "finite_difference";
  const RunConfig c = parse_config(j);
  EXPECT_DOUBLE_EQ(std::get<FiniteDifferenceDerivatives>(c.derivative_mode).step, 1e-3);
  EXPECT_FALSE(build_surface(c).is_analytic());
}

TEST(Config, Tolerances) {
  json j = base();
  j["tolerances"] = {{"codazzi", 1e-3}};
  EXPECT_DOUBLE_EQ(parse_config(j).tolerances.at("codazzi"), 1e-3);
  j["tolerances"] = {{"nonsense", 1.0}};
  EXPECT_EQ(message_for(j).rfind("tolerances: ", 0), 0u);
}

TEST(Config, CommentsAllowedInText) {
  const RunConfig c = parse_config_text("// note\n" + base().dump());
  EXPECT_EQ(c.surface.name, "cylinder");
  EXPECT_THROW((void)parse_config_text("{"), ConfigError);
  EXPECT_THROW((void)load_config("/nonexistent/config.json"), ConfigError);
}

TEST(Config, RoundTrip) {
  json j = base();
  j["material"] = {{"model", "svk"}, {"lambda", 2.0}, {"mu", 0.5}};
  j["grid"] = {{"nx", 3}, {"ny", 5}, {"order", 2}};
  j["surface"]["domain"] = {-0.25, 0.25, -0.5, 0.5};
  j["sweep"] = {{"param", "h"}, {"values", {0.01, 0.005}}, {"point", {0.1, 0.0}}};
  const RunConfig a = parse_config(j);
  const json once = to_json(a);
  EXPECT_EQ(to_json(parse_config(once)), once);
  EXPECT_EQ(once.at("grid").at("ny"), 5);
}

TEST(Config, ShippedConfigsLoad) {
  const std::filesystem::path dir = PLATE_CONFIG_DIR;
  int n = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".json") continue;
    EXPECT_NO_THROW((void)load_config(entry.path())) << entry.path();
    ++n;
  }
  EXPECT_GE(n, 5);
}
