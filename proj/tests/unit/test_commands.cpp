#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "plate/commands.hpp"
#include "plate/errors.hpp"

using namespace plate;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {
RunConfig cfg(const std::string& text) { return parse_config_text(text); }

RunConfig shipped(const std::string& name) { return load_config(fs::path(PLATE_CONFIG_DIR) / name); }

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("plate_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// log-log slope of one observable against the swept value (or against another observable)
double slope(const std::vector<SweepRow>& rows, const std::string& y, const std::string& x = "") {
  std::map<double, double> ys, xs;
  for (const auto& r : rows) {
    if (r.observable == y) ys[r.value] = r.result;
    if (!x.empty() && r.observable == x) xs[r.value] = r.result;
  }
  const auto first = ys.begin();
  const auto last = std::prev(ys.end());
  const double x0 = x.empty() ? first->first : xs.at(first->first);
  const double x1 = x.empty() ? last->first : xs.at(last->first);
  return std::log(last->second / first->second) / std::log(x1 / x0);
}
}  // namespace

TEST(Evaluate, PlaneIsZero) {
  const Evaluation e = evaluate(cfg(R"({"surface": {"name": "plane"}, "material": {"model": "gent"}, "h": 0.01,
                                        "grid": {"nx": 2, "ny": 2, "order": 2}})"));
  ASSERT_EQ(e.rows.size(), 16u);
  for (const auto& r : e.rows) {
    EXPECT_EQ(r.contents.stretching, 0.0);
    EXPECT_EQ(r.contents.bending, 0.0);
  }
  EXPECT_EQ(e.totals.total, 0.0);
}

TEST(Evaluate, CylinderBendingColumn) {
  const RunConfig c = shipped("cylinder_gent.json");
  const Evaluation e = evaluate(c);
  for (const auto& r : e.rows) EXPECT_NEAR(r.contents.bending, 4.0 / 3.0, 1e-12);
  const std::string csv = points_csv(e.rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "x1,x2,trC,detC,lambda1,lambda2,H,K,b1,w_s,w_b,formula_id");
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), e.rows.size() + 1);
  EXPECT_EQ(e.formula_ids, std::vector<std::string>{formula::gent_unit_det});
}

TEST(Evaluate, SummaryRoundTrip) {
  const RunConfig c = shipped("cylinder_gent.json");
  const json s = summary_json(c, evaluate(c));
  EXPECT_EQ(to_json(parse_config(s.at("config"))), s.at("config"));
  EXPECT_NEAR(s.at("results").at("total_bend").get<double>(), 4.0 / 3.0, 1e-13);
  EXPECT_EQ(s.at("results").at("profile_at_center").at("kind"), "polynomial");
}

TEST(Evaluate, OutputsAreDeterministic) {
  const RunConfig c = shipped("cylinder_gent.json");
  std::ostringstream log;
  const fs::path a = scratch("det_a"), b = scratch("det_b");
  ASSERT_EQ(cmd_evaluate(c, a, log), exit_code::ok);
  ASSERT_EQ(cmd_evaluate(c, b, log), exit_code::ok);
  EXPECT_EQ(slurp(a / "points.csv"), slurp(b / "points.csv"));
  EXPECT_EQ(slurp(a / "summary.json"), slurp(b / "summary.json"));
}

TEST(Evaluate, AdmissibilityExitCode) {
  const RunConfig c = cfg(R"({"surface": {"name": "uniform_stretch", "params": {"l1": 2.0, "l2": 0.5}},
                              "material": {"model": "gent", "Jm": 2.0}, "h": 0.01})");
  std::ostringstream log;
  EXPECT_EQ(cmd_evaluate(c, scratch("adm"), log), exit_code::admissibility);
  EXPECT_NE(log.str().find("at x = ("), std::string::npos);
}

TEST(Evaluate, MooneyRivlinIsUsageError) {
  std::ostringstream log;
  const RunConfig c = cfg(R"({"surface": {"name": "plane"}, "material": {"model": "mooney_rivlin"}, "h": 0.01})");
  EXPECT_EQ(cmd_evaluate(c, scratch("mr"), log), exit_code::usage);
}

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(exit_code_for(AdmissibilityError("x")), exit_code::admissibility);
  EXPECT_EQ(exit_code_for(PreconditionError("x")), exit_code::admissibility);
  EXPECT_EQ(exit_code_for(DegenerateImmersionError("x")), exit_code::admissibility);
  EXPECT_EQ(exit_code_for(ConfigError("x")), exit_code::usage);
  EXPECT_EQ(exit_code_for(std::runtime_error("x")), exit_code::usage);
}

TEST(Verify, SelectedChecksPass) {
  std::ostringstream log;
  const fs::path out = scratch("verify");
  EXPECT_EQ(cmd_verify(cfg(R"({"verify": {"checks": ["codazzi", "7"]}})"), false, out, log), exit_code::ok);
  const json v = json::parse(slurp(out / "verdicts.json"));
  EXPECT_TRUE(v.at("all_pass").get<bool>());
  EXPECT_GT(v.at("passed").get<int>(), 0);
  for (const auto& item : v.at("verdicts")) {
    for (const char* key : {"check_id", "claim", "comparison", "expected", "observed", "tolerance", "pass"}) {
      EXPECT_TRUE(item.contains(key)) << key;
    }
  }
}

TEST(Verify, PerturbedBetaFails) {
  std::ostringstream log;
  const RunConfig c =
      cfg(R"({"verify": {"checks": ["incompressibility_order"], "beta_perturbation": 1e-3}})");
  EXPECT_EQ(cmd_verify(c, false, scratch("perturbed"), log), exit_code::verification_failed);
}

TEST(Verify, EmptySelectionIsUsageError) {
  std::ostringstream log;
  EXPECT_EQ(cmd_verify(std::nullopt, false, scratch("empty"), log), exit_code::usage);
  EXPECT_THROW((void)run_verification({}, {}), ConfigError);
  EXPECT_THROW((void)run_verification({"bogus"}, {}), ConfigError);
}

TEST(Sweep, UnknownParameter) {
  RunConfig c = shipped("cylinder_h_sweep.json");
  c.sweep->param = "temperature";
  std::ostringstream log;
  EXPECT_EQ(cmd_sweep(c, scratch("bad_sweep"), log), exit_code::usage);
}

TEST(Sweep, DetResidualIsCubicInH) {
  const auto rows = run_sweep(shipped("cylinder_h_sweep.json"));
  EXPECT_NEAR(slope(rows, "detcf_residual"), 3.0, 0.05);
  const std::string csv = sweep_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "param,value,observable,result");
}

TEST(Sweep, GentApproachesNeoHookeanAsOneOverJm) {
  const auto rows = run_sweep(shipped("stretch_jm_sweep.json"));
  EXPECT_NEAR(slope(rows, "gent_nh_gap"), -1.0, 0.02);
}

TEST(Sweep, CgStretchingIsQuadraticForSmallStrain) {
  const auto rows = run_sweep(shipped("cg_lambda1_sweep.json"));
  EXPECT_NEAR(slope(rows, "w1_quadratic_gap", "strain_norm"), 3.0, 0.1);
}

TEST(Dispatch, Errors) {
  std::ostringstream log;
  EXPECT_EQ(dispatch("evaluate", std::nullopt, scratch("d1"), false, log), exit_code::usage);
  EXPECT_EQ(dispatch("evaluate", fs::path("/nonexistent.json"), scratch("d2"), false, log), exit_code::usage);
  EXPECT_EQ(dispatch("frobnicate", std::nullopt, scratch("d3"), false, log), exit_code::usage);
  EXPECT_EQ(dispatch("evaluate", fs::path(PLATE_CONFIG_DIR) / "cylinder_gent.json", scratch("d4"), true, log),
            exit_code::usage);
}
