#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "plate/config.hpp"
#include "plate/profile_types.hpp"
#include "plate/reduced_energy.hpp"
#include "plate/verification.hpp"

namespace plate {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failed = 1;
inline constexpr int usage = 2;
inline constexpr int admissibility = 3;
}  // namespace exit_code

/// Exit code for an exception escaping a command: configuration and other
/// infrastructure problems map to 2, failures of a formula's assumptions at a
/// point (admissibility, degeneracy, preconditions) to 3.
[[nodiscard]] int exit_code_for(const std::exception& e);

/// Through-thickness profile each material uses at a jet.
[[nodiscard]] ThicknessProfile profile_for(const SurfaceJet& jet, const MaterialModel& m, double h);

struct PointRow {
  Vec2 x;
  double weight = 0.0;  // area quadrature weight
  double trC = 0.0, detC = 0.0, lambda1 = 0.0, lambda2 = 0.0, H = 0.0, K = 0.0, b1 = 0.0;
  EnergyContents contents;
};

struct Evaluation {
  std::vector<PointRow> rows;
  IntegratedEnergy totals;
  std::vector<std::string> formula_ids;  // sorted, unique
  ThicknessProfile center_profile;
};

/// Contents at every area quadrature node. Errors carry the offending point.
[[nodiscard]] Evaluation evaluate(const RunConfig& c);
[[nodiscard]] std::string points_csv(const std::vector<PointRow>& rows);
[[nodiscard]] nlohmann::json summary_json(const RunConfig& c, const Evaluation& e);

/// Runs the selected criteria (ids or numbers) in matrix order.
[[nodiscard]] std::vector<Verdict> run_verification(const std::vector<std::string>& checks,
                                                    const VerifyOptions& options);
[[nodiscard]] nlohmann::json verdicts_json(const std::vector<Verdict>& verdicts);

struct SweepRow {
  std::string param;
  double value = 0.0;
  std::string observable;
  double result = 0.0;
};

[[nodiscard]] std::vector<std::string> default_observables(const std::string& param, const MaterialModel& m);
[[nodiscard]] std::vector<SweepRow> run_sweep(const RunConfig& c);
[[nodiscard]] std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Command entry points. Outputs go to `out_dir`, messages to `log`.
/// They return exit codes and do not throw.
int cmd_evaluate(const RunConfig& c, const std::filesystem::path& out_dir, std::ostream& log);
int cmd_verify(const std::optional<RunConfig>& c, bool all, const std::filesystem::path& out_dir,
               std::ostream& log);
int cmd_sweep(const RunConfig& c, const std::filesystem::path& out_dir, std::ostream& log);

/// Loads the config (when given) and runs `command` ("evaluate", "verify" or "sweep").
int dispatch(const std::string& command, const std::optional<std::filesystem::path>& config,
             const std::filesystem::path& out_dir, bool all, std::ostream& log);

}  // namespace plate
