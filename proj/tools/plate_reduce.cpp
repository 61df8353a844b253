#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "plate/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Plate energies from three-dimensional elasticity: evaluate, verify and sweep."};
  app.require_subcommand(1);

  std::string config;
  std::string out = ".";
  bool all = false;

  const auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config, "run configuration (JSON)");
    sub->add_option("--out", out, "output directory")->capture_default_str();
    sub->add_flag("--all", all, "run the full built-in verification matrix (verify only)");
    return sub;
  };
  add("evaluate", "per-point contents (points.csv) and integrated totals (summary.json)");
  add("verify", "closed forms against the oracles (verdicts.json)");
  add("sweep", "long-format parameter sweep (sweep.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return plate::exit_code::usage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  std::optional<std::filesystem::path> config_path;
  if (!config.empty()) config_path = config;
  return plate::dispatch(command, config_path, out, all, std::cerr);
}
