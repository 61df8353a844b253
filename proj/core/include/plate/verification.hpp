#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace plate {

/// One comparison between a closed form and an independent oracle.
struct Verdict {
  std::string check_id;
  std::string claim;       // what is being checked, in words
  std::string comparison;  // "relative", "absolute" or "upper_bound"
  double expected = 0.0;
  double observed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

/// Named tolerances; configs may override any of them by name.
struct VerifyTolerances {
  double cross_path = 1e-8;
  double codazzi = 1e-4;
  double egregium_fd = 1e-3;
  double egregium_reduced = 1e-6;
  double fit_relative = 1e-5;
  double stretch_relative = 1e-6;
  double minimizer = 1e-8;
  double slope3 = 0.2;
  double slope5 = 0.3;
  double slope1 = 0.05;
  double ode_sup = 1e-6;
  double ode_residual = 1e-8;
  double alpha_bar_relative = 1e-4;
  double coupling_angle = 1e-6;
  double coupling_flat = 1e-12;
  double exact = 1e-12;

  /// Throws ConfigError on an unknown name or a nonpositive value.
  void apply(const std::map<std::string, double>& overrides);
  [[nodiscard]] std::map<std::string, double> as_map() const;
};

struct VerifyOptions {
  VerifyTolerances tol;
  /// Test hook: added to β of the incompressible profile in the residual-order check.
  double beta_perturbation = 0.0;
};

struct Criterion {
  std::string number;  // "1" … "12", "9b"
  std::string id;
  std::string title;
  std::function<std::vector<Verdict>(const VerifyOptions&)> run;
};

/// The full verification matrix, in acceptance order.
[[nodiscard]] const std::vector<Criterion>& criteria();

/// Looks up by id or number; throws ConfigError when unknown.
[[nodiscard]] const Criterion& find_criterion(const std::string& key);

}  // namespace plate
