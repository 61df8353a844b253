#include "plate/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "plate/errors.hpp"
#include "plate/oracle.hpp"
#include "plate/thickness_profile.hpp"

namespace plate {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string point_text(const Vec2& x) { return fmt::format("({:.17g}, {:.17g})", x(0), x(1)); }

// Re-raises a per-point failure with the point attached, keeping its category.
[[noreturn]] void rethrow_at(const Vec2& x) {
  const std::string at = " at x = " + point_text(x);
  try {
    throw;
  } catch (const AdmissibilityError& e) {
    throw AdmissibilityError(e.what() + at);
  } catch (const PreconditionError& e) {
    throw PreconditionError(e.what() + at);
  } catch (const DegenerateImmersionError& e) {
    throw DegenerateImmersionError(e.what() + at);
  } catch (const DegenerateDeformationError& e) {
    throw DegenerateDeformationError(e.what() + at);
  }
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw ConfigError("failed writing '" + path.string() + "'");
}

void prepare_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory '" + dir.string() + "': " + ec.message());
}

void require_reduced_energy(const MaterialModel& m) {
  if (std::holds_alternative<MooneyRivlin>(m)) {
    throw ConfigError("material: mooney_rivlin has no reduced energy; use it with the oracle_energy observable");
  }
}

json profile_json(const ThicknessProfile& p) {
  return std::visit(
      [](const auto& q) -> json {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, PolyProfile>) {
          return {{"kind", "polynomial"}, {"alpha", q.alpha}, {"beta", q.beta}, {"gamma", q.gamma}};
        } else {
          return {{"kind", "hyperbolic"}, {"slope", q.slope}, {"beta_bar", q.beta_bar}, {"series", q.series}};
        }
      },
      p);
}

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const AdmissibilityError*>(&e) != nullptr || dynamic_cast<const PreconditionError*>(&e) != nullptr ||
      dynamic_cast<const DegenerateImmersionError*>(&e) != nullptr ||
      dynamic_cast<const DegenerateDeformationError*>(&e) != nullptr) {
    return exit_code::admissibility;
  }
  return exit_code::usage;
}

ThicknessProfile profile_for(const SurfaceJet& jet, const MaterialModel& m, double h) {
  if (const auto* cg = std::get_if<CiarletGeymonat>(&m)) return cg_profile(jet, *cg);
  if (const auto* svk = std::get_if<SVK>(&m)) {
    if ((jet.C - Mat2::Identity()).norm() > 1e-8) {
      throw PreconditionError("the SVK profile needs an isometric mid surface (C = I)");
    }
    return svk_profile(jet.H, svk->lambda, svk->mu, h);
  }
  return incompressible_profile_general(jet);
}

Evaluation evaluate(const RunConfig& c) {
  require_reduced_energy(c.material);
  const ParametricSurface surface = build_surface(c);
  const AreaGrid grid{c.grid.nx, c.grid.ny, c.grid.order};

  Evaluation e;
  std::set<std::string> ids;
  for (const AreaNode& node : area_nodes(surface.domain(), grid)) {
    PointRow r;
    r.x = node.x;
    r.weight = node.weight;
    try {
      const SurfaceJet jet = evaluate_jet(surface, node.x);
      r.trC = jet.trC;
      r.detC = jet.detC;
      r.lambda1 = jet.lambda1;
      r.lambda2 = jet.lambda2;
      r.H = jet.H;
      r.K = jet.K;
      r.b1 = jet.b1;
      r.contents = material_contents(jet, c.material);
    } catch (const ConfigError&) {
      throw;
    } catch (const Error&) {
      rethrow_at(node.x);
    }
    ids.insert(r.contents.formula_id);
    e.rows.push_back(std::move(r));
  }
  e.totals = integrate_contents(surface, c.material, c.h, grid);
  e.formula_ids.assign(ids.begin(), ids.end());
  const Vec2 center = surface.domain().center();
  try {
    e.center_profile = profile_for(evaluate_jet(surface, center), c.material, c.h);
  } catch (const Error&) {
    rethrow_at(center);
  }
  return e;
}

std::string points_csv(const std::vector<PointRow>& rows) {
  fmt::memory_buffer out;
  fmt::format_to(std::back_inserter(out), "x1,x2,trC,detC,lambda1,lambda2,H,K,b1,w_s,w_b,formula_id\n");
  for (const auto& r : rows) {
    fmt::format_to(std::back_inserter(out), "{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{}\n",
                   r.x(0), r.x(1), r.trC, r.detC, r.lambda1, r.lambda2, r.H + 0.0, r.K + 0.0, r.b1,
                   r.contents.stretching + 0.0, r.contents.bending + 0.0, r.contents.formula_id);
  }
  return fmt::to_string(out);
}

json summary_json(const RunConfig& c, const Evaluation& e) {
  json results = {{"total_stretch", e.totals.total_stretch},
                  {"total_bend", e.totals.total_bend},
                  {"total", e.totals.total},
                  {"points", e.rows.size()},
                  {"formula_ids", e.formula_ids},
                  {"profile_at_center", profile_json(e.center_profile)}};
  return {{"config", to_json(c)}, {"results", results}};
}

std::vector<Verdict> run_verification(const std::vector<std::string>& checks, const VerifyOptions& options) {
  if (checks.empty()) throw ConfigError("verify: empty check selection");
  std::set<std::string> wanted;
  for (const auto& key : checks) wanted.insert(find_criterion(key).id);
  std::vector<Verdict> out;
  for (const Criterion& c : criteria()) {
    if (!wanted.contains(c.id)) continue;
    auto v = c.run(options);
    out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  }
  return out;
}

json verdicts_json(const std::vector<Verdict>& verdicts) {
  json list = json::array();
  std::size_t failed = 0;
  for (const auto& v : verdicts) {
    if (!v.pass) ++failed;
    list.push_back({{"check_id", v.check_id},
                    {"claim", v.claim},
                    {"comparison", v.comparison},
                    {"expected", v.expected},
                    {"observed", v.observed},
                    {"tolerance", v.tolerance},
                    {"pass", v.pass},
                    {"note", v.note}});
  }
  return {{"verdicts", list},
          {"passed", verdicts.size() - failed},
          {"failed", failed},
          {"all_pass", failed == 0}};
}

std::vector<std::string> default_observables(const std::string& param, const MaterialModel& m) {
  const bool mr = std::holds_alternative<MooneyRivlin>(m);
  if (param == "h") {
    if (mr) return {"oracle_energy", "detcf_residual"};
    return {"oracle_energy", "reduced_energy", "energy_gap", "detcf_residual"};
  }
  if (param == "Jm") return {"w_s", "w_b", "gent_nh_gap"};
  if (param == "lambda1") {
    if (mr) return {"strain_norm", "oracle_energy"};
    std::vector<std::string> v = {"strain_norm", "w_s", "w_b"};
    if (std::holds_alternative<CiarletGeymonat>(m)) v.emplace_back("w1_quadratic_gap");
    return v;
  }
  if (param == "quad_order") return {"oracle_energy"};
  throw ConfigError("sweep.param: unknown sweep parameter '" + param + "'");
}

std::vector<SweepRow> run_sweep(const RunConfig& c) {
  if (!c.sweep) throw ConfigError("sweep: missing sweep section");
  const SweepSpec& spec = *c.sweep;
  (void)default_observables(spec.param, c.material);  // rejects unknown parameters
  const std::vector<std::string> observables =
      spec.observables.empty() ? default_observables(spec.param, c.material) : spec.observables;

  const bool needs_contents = has(observables, "w_s") || has(observables, "w_b") ||
                              has(observables, "reduced_energy") || has(observables, "energy_gap") ||
                              has(observables, "w1_quadratic_gap");
  if (needs_contents) require_reduced_energy(c.material);
  if (spec.param == "Jm" && !std::holds_alternative<Gent>(c.material)) {
    throw ConfigError("sweep.param: Jm needs a gent material");
  }
  if (has(observables, "gent_nh_gap") && !std::holds_alternative<Gent>(c.material)) {
    throw ConfigError("sweep.observables: gent_nh_gap needs a gent material");
  }
  if (has(observables, "w1_quadratic_gap") && !std::holds_alternative<CiarletGeymonat>(c.material)) {
    throw ConfigError("sweep.observables: w1_quadratic_gap needs a ciarlet_geymonat material");
  }

  std::vector<SweepRow> rows;
  for (double value : spec.values) {
    RunConfig v = c;
    if (spec.param == "h") {
      if (!(value > 0.0)) throw ConfigError("sweep.values: h must be positive");
      v.h = value;
    } else if (spec.param == "Jm") {
      std::get<Gent>(v.material).Jm = value;
      try {
        validate(v.material);
      } catch (const Error& e) {
        throw ConfigError(std::string("sweep.values: ") + e.what());
      }
    } else if (spec.param == "lambda1") {
      v.surface.params["l1"] = value;
    } else if (spec.param == "quad_order") {
      if (value < 1.0 || value != std::floor(value)) throw ConfigError("sweep.values: quad_order must be a positive integer");
      v.quad_order = static_cast<int>(value);
    }

    ParametricSurface surface = [&] {
      try {
        return build_surface(v);
      } catch (const ConfigError& e) {
        throw ConfigError(std::string("sweep: ") + e.what());
      }
    }();
    const Vec2 x = spec.point.value_or(surface.domain().center());
    if (!surface.domain().contains(x, surface.required_margin())) {
      throw ConfigError("sweep.point: " + point_text(x) + " is outside the surface domain");
    }

    try {
      const SurfaceJet jet = evaluate_jet(surface, x);
      std::optional<EnergyContents> contents;
      std::optional<ThicknessProfile> profile;
      std::optional<double> oracle_energy;
      const auto get_contents = [&]() -> const EnergyContents& {
        if (!contents) contents = material_contents(jet, v.material);
        return *contents;
      };
      const auto get_profile = [&]() -> const ThicknessProfile& {
        if (!profile) profile = profile_for(jet, v.material, v.h);
        return *profile;
      };
      const auto get_oracle = [&] {
        if (!oracle_energy) {
          oracle_energy = oracle::through_thickness_energy(jet, v.material, get_profile(), v.h, v.quad_order);
        }
        return *oracle_energy;
      };
      const auto reduced = [&] {
        const EnergyContents& w = get_contents();
        return v.h * w.stretching + v.h * v.h * v.h * w.bending;
      };

      for (const auto& name : observables) {
        double r = 0.0;
        if (name == "w_s") {
          r = get_contents().stretching;
        } else if (name == "w_b") {
          r = get_contents().bending;
        } else if (name == "oracle_energy") {
          r = get_oracle();
        } else if (name == "reduced_energy") {
          r = reduced();
        } else if (name == "energy_gap") {
          r = std::abs(get_oracle() - reduced());
        } else if (name == "detcf_residual") {
          const ThicknessProfile& p = get_profile();
          r = std::abs(exact_invariants(jet, profile_value(p, v.h), profile_d1(p, v.h)).inv.I3 - 1.0);
        } else if (name == "gent_nh_gap") {
          const ThicknessProfile& p = get_profile();
          const Invariants inv = exact_invariants(jet, profile_value(p, v.h), profile_d1(p, v.h)).inv;
          const Gent& g = std::get<Gent>(v.material);
          r = std::abs(volumetric_energy(g, inv) - volumetric_energy(NeoHookean{g.mu}, inv));
        } else if (name == "strain_norm") {
          r = (0.5 * (jet.C - Mat2::Identity())).norm();
        } else if (name == "w1_quadratic_gap") {
          const Lame l = lame(std::get<CiarletGeymonat>(v.material));
          const Mat2 E = 0.5 * (jet.C - Mat2::Identity());
          r = std::abs(get_contents().stretching - cg_small_strain_contents(E, jet.H, jet.K, l.lambda, l.mu).stretching);
        } else {
          throw ConfigError("sweep.observables: unknown observable '" + name + "'");
        }
        rows.push_back({spec.param, value, name, r});
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const Error&) {
      rethrow_at(x);
    }
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  fmt::memory_buffer out;
  fmt::format_to(std::back_inserter(out), "param,value,observable,result\n");
  for (const auto& r : rows) {
    fmt::format_to(std::back_inserter(out), "{},{:.17g},{},{:.17g}\n", r.param, r.value, r.observable, r.result);
  }
  return fmt::to_string(out);
}

int cmd_evaluate(const RunConfig& c, const fs::path& out_dir, std::ostream& log) {
  try {
    const Evaluation e = evaluate(c);
    prepare_dir(out_dir);
    write_file(out_dir / "points.csv", points_csv(e.rows));
    write_file(out_dir / "summary.json", summary_json(c, e).dump(2) + "\n");
    log << fmt::format("evaluated {} points; total {:.17g} (stretch {:.17g}, bend {:.17g})\n", e.rows.size(),
                       e.totals.total, e.totals.total_stretch, e.totals.total_bend);
    return exit_code::ok;
  } catch (const std::exception& ex) {
    log << "error: " << ex.what() << "\n";
    return exit_code_for(ex);
  }
}

int cmd_verify(const std::optional<RunConfig>& c, bool all, const fs::path& out_dir, std::ostream& log) {
  try {
    VerifyOptions options;
    std::vector<std::string> checks;
    if (c) {
      options.tol.apply(c->tolerances);
      if (c->verify) {
        options.beta_perturbation = c->verify->beta_perturbation;
        checks = c->verify->checks;
      }
    }
    if (all) {
      checks.clear();
      for (const auto& crit : criteria()) checks.push_back(crit.id);
    }
    if (checks.empty()) throw ConfigError("verify: empty check selection (use --all or verify.checks)");

    const std::vector<Verdict> verdicts = run_verification(checks, options);
    prepare_dir(out_dir);
    write_file(out_dir / "verdicts.json", verdicts_json(verdicts).dump(2) + "\n");
    bool ok = true;
    for (const auto& v : verdicts) {
      ok = ok && v.pass;
      log << fmt::format("{} {} observed {:.6g} expected {:.6g} tol {:.3g}\n", v.pass ? "PASS" : "FAIL", v.check_id,
                         v.observed, v.expected, v.tolerance);
    }
    return ok ? exit_code::ok : exit_code::verification_failed;
  } catch (const std::exception& ex) {
    log << "error: " << ex.what() << "\n";
    return exit_code::usage;
  }
}

int cmd_sweep(const RunConfig& c, const fs::path& out_dir, std::ostream& log) {
  try {
    const std::vector<SweepRow> rows = run_sweep(c);
    prepare_dir(out_dir);
    write_file(out_dir / "sweep.csv", sweep_csv(rows));
    log << fmt::format("wrote {} sweep rows\n", rows.size());
    return exit_code::ok;
  } catch (const std::exception& ex) {
    log << "error: " << ex.what() << "\n";
    return exit_code_for(ex);
  }
}

int dispatch(const std::string& command, const std::optional<fs::path>& config, const fs::path& out_dir, bool all,
             std::ostream& log) {
  std::optional<RunConfig> cfg;
  try {
    if (config) cfg = load_config(*config);
  } catch (const std::exception& ex) {
    log << "error: " << ex.what() << "\n";
    return exit_code::usage;
  }
  if (command == "verify") return cmd_verify(cfg, all, out_dir, log);
  if (command != "evaluate" && command != "sweep") {
    log << "error: unknown command '" << command << "'\n";
    return exit_code::usage;
  }
  if (!cfg) {
    log << "error: --config is required for " << command << "\n";
    return exit_code::usage;
  }
  if (all) {
    log << "error: --all only applies to verify\n";
    return exit_code::usage;
  }
  return command == "evaluate" ? cmd_evaluate(*cfg, out_dir, log) : cmd_sweep(*cfg, out_dir, log);
}

}  // namespace plate
