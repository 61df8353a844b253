#include "plate/reduced_energy.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "plate/errors.hpp"
#include "plate/thickness_profile.hpp"

namespace plate {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void stiffening(double denom) {
  std::ostringstream os;
  os.precision(17);
  os << "Gent stiffening limit violated (admissibility denominator " << denom << " <= 0)";
  throw AdmissibilityError(os.str());
}

}  // namespace

EnergyContents gent_contents_unit_det(const SurfaceJet& j, double mu, double Jm) {
  const double denom = Jm - (j.trC - 2.0);
  if (!(denom > 0.0)) stiffening(denom);
  const double r = (j.b1 - 2.0 * j.H) / denom;
  EnergyContents c;
  c.stretching = -mu * Jm * std::log1p(-(j.trC - 2.0) / Jm);
  c.bending = mu / 3.0 * Jm * (2.0 * r * r + (16.0 * j.H * j.H - j.K * (j.trC + 2.0)) / denom);
  c.formula_id = formula::gent_unit_det;
  return c;
}

EnergyContents gent_contents_general(const SurfaceJet& j, double mu, double Jm) {
  const double d = j.detC;
  const double denom = d * (Jm - j.trC + 3.0) - 1.0;
  if (!(denom > 0.0)) stiffening(denom);
  const double r = (d * j.b1 - 2.0 * j.H) / denom;
  EnergyContents c;
  c.stretching = -mu * Jm * std::log1p(-(j.trC - 3.0 + 1.0 / d) / Jm);
  c.bending = mu * Jm / (3.0 * d) * (2.0 * r * r + (16.0 * j.H * j.H - j.K * (d * j.trC + 2.0)) / denom);
  c.formula_id = formula::gent_general_det;
  return c;
}

EnergyContents gent_contents(const SurfaceJet& jet, double mu, double Jm, double tol) {
  if (std::abs(jet.detC - 1.0) <= tol) return gent_contents_unit_det(jet, mu, Jm);
  return gent_contents_general(jet, mu, Jm);
}

EnergyContents neo_hookean_contents(const SurfaceJet& j, double mu) {
  const double d = j.detC;
  EnergyContents c;
  c.stretching = mu * (j.trC - 3.0 + 1.0 / d);
  c.bending = mu / (3.0 * d * d) * (16.0 * j.H * j.H - j.K * (d * j.trC + 2.0));
  c.formula_id = formula::neo_hookean_limit;
  return c;
}

double gent_stretching_reduced(double mu, double Jm, double lambda1) {
  const double s = lambda1 - 1.0 / lambda1;
  const double arg = 1.0 - s * s / Jm;
  if (!(arg > 0.0)) stiffening(arg);
  return -mu * Jm * std::log1p(-s * s / Jm);
}

double gent_bending_isometric(double mu, double H) { return 16.0 / 3.0 * mu * H * H; }

double cg_w3_preform(const SurfaceJet& j, const CiarletGeymonat& m, double beta) {
  const double a = m.a, b = m.b, d = j.detC, H = j.H, K = j.K, b1 = j.b1;
  const double D = a + b * d;
  const double ab = a + b;
  const double lin = 4.0 * H * ab * (4.0 * b * d - a) / D + 2.0 * a * b1;
  const double c0 = a * ab * (2.0 * H * b1 - K * j.trC) / D +
                    2.0 * ab * ab * (2.0 * (a + 2.0 * b * d) * H * H - a * K) / (D * D);
  return 2.0 / 3.0 * (8.0 * D * beta * beta + lin * beta + c0);
}

EnergyContents cg_contents(const SurfaceJet& j, const CiarletGeymonat& m) {
  if (!(j.detC > 0.0)) throw DomainError("det C must be positive");
  const PolyProfile p = cg_profile(j, m);
  const double D = m.a + m.b * j.detC;
  EnergyContents c;
  c.stretching =
      2.0 * (m.a * j.trC + D * p.alpha * p.alpha - (m.a + m.b) * std::log(p.alpha * p.alpha * j.detC)) -
      2.0 * (3.0 * m.a + m.b);
  c.bending = cg_w3_preform(j, m, p.beta);
  c.formula_id = formula::cg_proof_path;
  return c;
}

double cg_w1_closed(const SurfaceJet& j, const CiarletGeymonat& m) {
  const double a = m.a, b = m.b, d = j.detC;
  const double D = a + b * d;
  return 2.0 * (a * j.trC + (a + b) * (1.0 - std::log((a + b) * d / D)) - (3.0 * a + b));
}

double cg_w3_closed(const SurfaceJet& j, const CiarletGeymonat& m) {
  const double a = m.a, b = m.b, d = j.detC, H = j.H, K = j.K, b1 = j.b1;
  const double D = a + b * d;
  const double ab = a + b;
  return a * ab * ab * (32.0 * b * d + 7.0 * a) / (3.0 * D * D * D) * H * H +
         5.0 / 3.0 * a * a * ab / (D * D) * b1 * H -
         2.0 / 3.0 * a * ab * (D * j.trC + 2.0 * ab) / (D * D) * K - a * a / (12.0 * D) * b1 * b1;
}

double cg_w1_lame(const SurfaceJet& j, double lambda, double mu) {
  const double d = j.detC;
  const double s = 2.0 * mu + lambda;
  return mu * j.trC + 0.5 * s * (1.0 - std::log(s * d / (2.0 * mu + lambda * d))) - (3.0 * mu + 0.5 * lambda);
}

double cg_w3_lame(const SurfaceJet& j, double lambda, double mu) {
  const double d = j.detC, H = j.H, K = j.K, b1 = j.b1;
  const double s = 2.0 * mu + lambda;
  const double D = 2.0 * mu + lambda * d;
  return mu * s * s * (16.0 * lambda * d + 7.0 * mu) / (3.0 * D * D * D) * H * H +
         5.0 / 3.0 * mu * mu * s / (D * D) * b1 * H -
         mu * s * (D * j.trC + 2.0 * s) / (3.0 * D * D) * K - mu * mu / (12.0 * D) * b1 * b1;
}

EnergyContents cg_small_strain_contents(const Mat2& E, double H, double K, double lambda, double mu) {
  const double t = E.trace();
  EnergyContents c;
  c.stretching = 2.0 * lambda * mu / (lambda + 2.0 * mu) * t * t + 2.0 * mu * (E * E).trace();
  c.bending = 16.0 / 3.0 * mu * (lambda + mu) / (2.0 * mu + lambda) * H * H - 4.0 / 3.0 * mu * K;
  c.formula_id = formula::cg_small_strain;
  return c;
}

EnergyContents svk_content(double H, double K, double lambda, double mu) {
  EnergyContents c;
  c.stretching = 0.0;
  c.bending = 16.0 / 3.0 * mu * (lambda + mu) / (2.0 * mu + lambda) * H * H - 4.0 / 3.0 * mu * K;
  c.formula_id = formula::svk_isometry;
  return c;
}

double eigenframe_coupling(double k1, double k2, double lambda1, double angle) {
  const double L = lambda1 * lambda1;
  const double A = k1 * L + k2 / L - k1 - k2;
  const double B = k2 * L + k1 / L - k1 - k2;
  const double c = std::cos(angle), s = std::sin(angle);
  const double w = A * c * c + B * s * s;
  return w * w;
}

std::vector<double> coupling_stationary_angles(double k1, double k2, double lambda1) {
  std::vector<double> out{0.0, std::numbers::pi / 2.0};
  const double L = lambda1 * lambda1;
  const double num = k1 * L * L - (k1 + k2) * L + k2;
  const double den = k2 * L * L - (k1 + k2) * L + k1;
  if (den == 0.0) return out;
  const double t2 = -num / den;
  if (t2 > 0.0 && std::isfinite(t2)) out.insert(out.begin() + 1, std::atan(std::sqrt(t2)));
  return out;
}

EnergyContents material_contents(const SurfaceJet& jet, const MaterialModel& m) {
  return std::visit(
      overloaded{[&](const Gent& g) { return gent_contents(jet, g.mu, g.Jm); },
                 [&](const NeoHookean& n) { return neo_hookean_contents(jet, n.mu); },
                 [&](const MooneyRivlin&) -> EnergyContents {
                   throw PreconditionError("no reduced contents for Mooney-Rivlin (oracle path only)");
                 },
                 [&](const CiarletGeymonat& c) { return cg_contents(jet, c); },
                 [&](const SVK& s) {
                   if ((jet.C - Mat2::Identity()).norm() > 1e-8) {
                     throw PreconditionError("SVK contents need an isometric mid surface (C = I)");
                   }
                   return svk_content(jet.H, jet.K, s.lambda, s.mu);
                 }},
      m);
}

IntegratedEnergy integrate_contents(const ParametricSurface& surface, const MaterialModel& m, double h,
                                    const AreaGrid& grid) {
  if (!(h > 0.0)) throw DomainError("half thickness h must be positive");
  const auto nodes = area_nodes(surface.domain(), grid);
  std::vector<double> ws(nodes.size()), wb(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Vec2& x = nodes[i].x;
    try {
      const EnergyContents c = material_contents(evaluate_jet(surface, x), m);
      ws[i] = nodes[i].weight * c.stretching;
      wb[i] = nodes[i].weight * c.bending;
    } catch (const AdmissibilityError& e) {
      std::ostringstream os;
      os.precision(17);
      os << e.what() << " at x = (" << x(0) << ", " << x(1) << ")";
      throw AdmissibilityError(os.str());
    }
  }
  IntegratedEnergy out;
  out.total_stretch = pairwise_sum(ws);
  out.total_bend = pairwise_sum(wb);
  out.total = h * out.total_stretch + h * h * h * out.total_bend;
  return out;
}

}  // namespace plate
