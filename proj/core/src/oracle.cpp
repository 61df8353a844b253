#include "plate/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "plate/quadrature.hpp"

namespace plate::oracle {

namespace {

std::string at_x3(double x3) {
  std::ostringstream os;
  os.precision(17);
  os << " at x3 = " << x3;
  return os.str();
}

}  // namespace

double through_thickness_energy(const SurfaceJet& jet, const MaterialModel& material,
                                const ThicknessProfile& profile, double h, int quad_order) {
  if (!(h > 0.0)) throw DomainError("thickness h must be positive");
  if (quad_order < 1) throw DomainError("quadrature order must be positive");
  const GaussLegendreRule rule = gauss_legendre(quad_order);
  std::vector<double> terms(rule.nodes.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const double x3 = h * rule.nodes[i];
    try {
      const ExactInvariants e =
          exact_invariants(jet, profile_value(profile, x3), profile_d1(profile, x3));
      terms[i] = rule.weights[i] * volumetric_energy(material, e.inv, e.Cf);
    } catch (const AdmissibilityError& err) {
      throw AdmissibilityError(err.what() + at_x3(x3));
    } catch (const DegenerateDeformationError& err) {
      throw DegenerateDeformationError(err.what() + at_x3(x3));
    }
  }
  return h * pairwise_sum(terms);
}

double through_thickness_energy(const ParametricSurface& surface, const Vec2& x,
                                const MaterialModel& material, const ThicknessProfile& profile,
                                double h, int quad_order) {
  return through_thickness_energy(evaluate_jet(surface, x), material, profile, h, quad_order);
}

HFit fit_h_powers(std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 4) throw FitError("h fit needs at least 4 samples");
  std::sort(samples.begin(), samples.end(), [](const auto& p, const auto& q) { return p.first > q.first; });
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!(samples[i].first > 0.0)) throw FitError("h samples must be positive");
    if (!std::isfinite(samples[i].second)) throw FitError("non-finite energy sample");
    if (i > 0 && samples[i].first == samples[i - 1].first) {
      throw FitError("rank-deficient design: repeated h sample");
    }
  }
  const double h_max = samples.front().first;
  const double h_min = samples.back().first;
  if (h_max < 10.0 * h_min * (1.0 - 1e-12)) throw FitError("h samples must span at least one decade");

  // energy/h = c1 + c3 h², in the scaled variable u = (h/h_max)².
  const auto n = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd A(n, 2);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto [h, e] = samples[static_cast<std::size_t>(i)];
    const double u = (h / h_max) * (h / h_max);
    A(i, 0) = 1.0;
    A(i, 1) = u;
    rhs(i) = e / h;
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  if (qr.rank() < 2) throw FitError("rank-deficient design");
  const Eigen::Vector2d c = qr.solve(rhs);

  HFit fit;
  for (const auto& [h, e] : samples) {
    fit.h_samples.push_back(h);
    fit.energies.push_back(e);
  }
  fit.c1 = c(0);
  fit.c3 = c(1) / (h_max * h_max);
  double r2 = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double h = fit.h_samples[i];
    const double r = fit.energies[i] - (fit.c1 * h + fit.c3 * h * h * h);
    r2 += r * r;
  }
  fit.residual_norm = std::sqrt(r2);
  return fit;
}

std::vector<double> default_h_set() { return {1e-2, 5e-3, 2e-3, 1e-3, 5e-4}; }

std::vector<double> bending_h_set() { return {2e-3, 1e-3, 5e-4, 2e-4, 1e-4}; }

HFit fit_energy(const std::function<double(double)>& energy, const std::vector<double>& hs) {
  std::vector<std::pair<double, double>> samples;
  samples.reserve(hs.size());
  for (double h : hs) samples.emplace_back(h, energy(h));
  return fit_h_powers(std::move(samples));
}

SurfaceJet isometric_jet(double H) {
  Mat32 g = Mat32::Zero();
  g(0, 0) = 1.0;
  g(1, 1) = 1.0;
  Hess32 hess{Mat32::Zero(), Mat32::Zero()};
  hess[0](2, 0) = -2.0 * H;  // ∂1∂1 y = −2H e3 gives ∇ν e1 = 2H e1
  return assemble_jet(Vec2::Zero(), g, hess);
}

OdeProfile integrate_svk_ode(double H, double lambda, double mu, double h, int n_steps, double slope) {
  if (!(mu > 0.0) || !(lambda >= 0.0)) throw DomainError("SVK needs mu > 0 and lambda >= 0");
  if (!(h > 0.0)) throw DomainError("thickness h must be positive");
  if (n_steps < 100) throw ResolutionError("n_steps must be at least 100");
  if (n_steps % 2 != 0) ++n_steps;
  const double dt = 2.0 * h / n_steps;
  const double k2 = 4.0 * H * H;
  if (std::sqrt(k2) * dt > 0.05) {
    const int need = static_cast<int>(std::ceil(2.0 * h * std::sqrt(k2) / 0.05));
    throw ResolutionError("step too coarse for |H| h; use at least " + std::to_string(need) + " steps");
  }
  const double forcing = -2.0 * lambda * H / (2.0 * mu + lambda);

  const int half = n_steps / 2;
  OdeProfile out;
  out.H = H;
  out.lambda = lambda;
  out.mu = mu;
  out.h = h;
  out.slope = slope;
  const auto n = static_cast<std::size_t>(n_steps + 1);
  out.x3.assign(n, 0.0);
  out.phi.assign(n, 0.0);
  out.dphi.assign(n, 0.0);

  const auto rhs = [&](double p, double q) { return std::pair{q, k2 * p + forcing}; };
  for (int dir : {+1, -1}) {
    const double step = dir * dt;
    double p = 0.0, q = slope;
    out.dphi[half] = slope;
    for (int k = 1; k <= half; ++k) {
      const auto [a1, b1] = rhs(p, q);
      const auto [a2, b2] = rhs(p + 0.5 * step * a1, q + 0.5 * step * b1);
      const auto [a3, b3] = rhs(p + 0.5 * step * a2, q + 0.5 * step * b2);
      const auto [a4, b4] = rhs(p + step * a3, q + step * b3);
      p += step / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4);
      q += step / 6.0 * (b1 + 2.0 * b2 + 2.0 * b3 + b4);
      const auto idx = static_cast<std::size_t>(half + dir * k);
      out.phi[idx] = p;
      out.dphi[idx] = q;
    }
  }
  for (std::size_t i = 0; i < n; ++i) out.x3[i] = -h + static_cast<double>(i) * dt;
  out.x3[static_cast<std::size_t>(half)] = 0.0;

  // Composite Simpson of the exact SVK energy along the fiber.
  const SurfaceJet jet = isometric_jet(H);
  const MaterialModel svk = SVK{lambda, mu};
  std::vector<double> terms(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = (i == 0 || i + 1 == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    try {
      const ExactInvariants e = exact_invariants(jet, out.phi[i], out.dphi[i]);
      terms[i] = w * volumetric_energy(svk, e.inv, e.Cf);
    } catch (const Error& err) {
      throw AdmissibilityError(err.what() + at_x3(out.x3[i]));
    }
  }
  out.energy = dt / 3.0 * pairwise_sum(terms);

  double res = 0.0;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    const double d2 = (-out.phi[i - 2] + 16.0 * out.phi[i - 1] - 30.0 * out.phi[i] + 16.0 * out.phi[i + 1] -
                       out.phi[i + 2]) /
                      (12.0 * dt * dt);
    res = std::max(res, std::abs(d2 - k2 * out.phi[i] - forcing));
  }
  out.ode_residual = res;
  return out;
}

OdeProfile solve_svk_profile_ode(double H, double lambda, double mu, double h, int n_steps,
                                 std::pair<double, double> bracket, double tol) {
  const auto energy = [&](double s) { return integrate_svk_ode(H, lambda, mu, h, n_steps, s).energy; };
  const auto best = minimize_scalar(energy, bracket.first, bracket.second, tol);
  return integrate_svk_ode(H, lambda, mu, h, n_steps, best.argmin);
}

OrderEstimate order_of_residual(const std::function<double(double)>& residual,
                                const std::vector<double>& h_set) {
  if (h_set.empty()) throw FitError("empty h set");
  const auto [lo, hi] = std::minmax_element(h_set.begin(), h_set.end());
  if (!(*lo > 0.0)) throw PreconditionError("h values must be positive");
  if (std::log10(*hi / *lo) < 1.5 - 1e-9) throw PreconditionError("h set must span at least 1.5 decades");

  OrderEstimate out;
  for (double h : h_set) {
    const double r = residual(h);
    if (!(r > 0.0) || !std::isfinite(r)) {
      std::ostringstream os;
      os.precision(6);
      os << "residual " << r << " at h = " << h << " is at the round-off floor; point dropped";
      out.warnings.push_back(os.str());
      continue;
    }
    out.h_used.push_back(h);
    out.residuals.push_back(r);
  }
  const std::size_t m = out.h_used.size();
  if (m < 2) throw FitError("fewer than two usable residuals");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double x = std::log(out.h_used[i]);
    const double y = std::log(out.residuals[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double dm = static_cast<double>(m);
  const double den = dm * sxx - sx * sx;
  if (!(den > 0.0)) throw FitError("degenerate h set");
  out.slope = (dm * sxy - sx * sy) / den;
  return out;
}

double exact_incompressible_phi(double H, double K, double detC, double x3) {
  if (!(detC > 0.0)) throw DomainError("det C must be positive");
  const double t = x3 / std::sqrt(detC);
  double phi = t;
  for (int it = 0; it < 60; ++it) {
    const double g = phi + phi * phi * (H + phi * K / 3.0) - t;
    const double dg = 1.0 + phi * (2.0 * H + phi * K);
    if (!(dg > 0.0)) throw DegenerateDeformationError("incompressible fiber folds" + at_x3(x3));
    const double step = g / dg;
    phi -= step;
    if (std::abs(step) <= 1e-17 * std::abs(phi) || step == 0.0) break;
  }
  return phi;
}

double exact_incompressible_dphi(double H, double K, double detC, double x3) {
  const double phi = exact_incompressible_phi(H, K, detC, x3);
  return 1.0 / (std::sqrt(detC) * (1.0 + phi * (2.0 * H + phi * K)));
}

long double cg_h1_objective(const CgPoint& p, long double alpha) {
  const long double a = p.a, b = p.b;
  const long double a2 = alpha * alpha;
  const long double I1 = static_cast<long double>(p.trC) + a2;
  const long double I3 = static_cast<long double>(p.detC) * a2;
  return 2.0L * (a * I1 + b * I3 - (a + b) * std::log(I3) - (3.0L * a + b));
}

long double cg_h3_objective(const CgPoint& p, long double alpha, long double beta) {
  const long double a = p.a, b = p.b;
  const long double trC = p.trC, detC = p.detC, H = p.H, K = p.K, b1 = p.b1;
  const long double al2 = alpha * alpha;
  // Taylor coefficients of I1 and I3 along φ = α x3 + β x3², from
  // C_f = (∇y + φ∇ν)ᵀ(∇y + φ∇ν) + φ'² e3⊗e3.
  const long double I1_2 = 4.0L * beta * beta + 2.0L * beta * b1 + al2 * (2.0L * H * b1 - K * trC);
  const long double I3_0 = detC * al2;
  const long double I3_1 = detC * 4.0L * alpha * (beta + H * al2);
  const long double I3_2 =
      detC * (4.0L * beta * beta + 20.0L * H * al2 * beta + (4.0L * H * H + 2.0L * K) * al2 * al2);
  const long double log_2 = I3_2 / I3_0 - 0.5L * (I3_1 / I3_0) * (I3_1 / I3_0);
  const long double W2 = a * I1_2 + b * I3_2 - (a + b) * log_2;
  return 2.0L / 3.0L * W2;
}

}  // namespace plate::oracle
