#include "plate/materials.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "plate/errors.hpp"

namespace plate {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive");
}

bool close(double x, double y) { return std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(y)); }

}  // namespace

std::string material_name(const MaterialModel& m) {
  return std::visit(overloaded{[](const Gent&) { return std::string("gent"); },
                               [](const NeoHookean&) { return std::string("neo_hookean"); },
                               [](const MooneyRivlin&) { return std::string("mooney_rivlin"); },
                               [](const CiarletGeymonat&) { return std::string("ciarlet_geymonat"); },
                               [](const SVK&) { return std::string("svk"); }},
                    m);
}

void validate(const MaterialModel& m) {
  std::visit(overloaded{[](const Gent& g) {
                          positive(g.mu, "gent mu");
                          positive(g.Jm, "gent Jm");
                        },
                        [](const NeoHookean& n) { positive(n.mu, "neo_hookean mu"); },
                        [](const MooneyRivlin& r) {
                          positive(r.mu, "mooney_rivlin mu");
                          if (!(r.chi > 0.0 && r.chi <= 1.0)) {
                            throw DomainError("mooney_rivlin chi must lie in (0, 1]");
                          }
                        },
                        [](const CiarletGeymonat& c) { (void)make_cg_checked(c.a, c.b, c.c, c.d); },
                        [](const SVK& s) {
                          positive(s.lambda, "svk lambda");
                          positive(s.mu, "svk mu");
                        }},
             m);
}

CiarletGeymonat make_cg(double a, double b) {
  positive(a, "ciarlet_geymonat a");
  positive(b, "ciarlet_geymonat b");
  return {a, b, 2.0 * (a + b), -(3.0 * a + b)};
}

CiarletGeymonat make_cg_lame(double lambda, double mu) {
  positive(lambda, "ciarlet_geymonat lambda");
  positive(mu, "ciarlet_geymonat mu");
  return make_cg(0.5 * mu, 0.25 * lambda);
}

CiarletGeymonat make_cg_checked(double a, double b, double c, double d) {
  CiarletGeymonat m = make_cg(a, b);
  if (!close(c, m.c)) {
    std::ostringstream os;
    os.precision(17);
    os << "ciarlet_geymonat c must equal 2(a+b) = " << m.c << ", got " << c;
    throw DomainError(os.str());
  }
  if (!close(d, m.d)) {
    std::ostringstream os;
    os.precision(17);
    os << "ciarlet_geymonat d must equal -(3a+b) = " << m.d << ", got " << d;
    throw DomainError(os.str());
  }
  return m;
}

Lame lame(const CiarletGeymonat& m) { return {4.0 * m.b, 2.0 * m.a}; }

Invariants principal_invariants(const Mat3& C) {
  const double tr = C.trace();
  return {tr, 0.5 * (tr * tr - (C * C).trace()), C.determinant()};
}

InvariantSeries invariant_series(const SurfaceJet& jet, const PolyProfile& p) {
  const double a = p.alpha, b = p.beta, g = p.gamma;
  const double trC = jet.trC, detC = jet.detC, H = jet.H, K = jet.K, b1 = jet.b1;
  const double tbn2 = 2.0 * H * b1 - K * trC;  // tr(B (∇_s ν)²)

  InvariantSeries s;
  s.I1 = {trC + a * a, 2.0 * a * (b1 + 2.0 * b), 4.0 * b * b + 6.0 * a * g + 2.0 * b * b1 + a * a * tbn2};
  s.I3 = {detC * a * a, detC * 4.0 * a * (b + H * a * a),
          detC * (4.0 * b * b + 6.0 * a * g + 20.0 * H * a * a * b + (4.0 * H * H + 2.0 * K) * a * a * a * a)};

  // I2 = det C_φ + φ'² tr C_φ
  const std::array<double, 3> det_phi = {detC, detC * 4.0 * H * a,
                                         detC * (4.0 * H * b + (4.0 * H * H + 2.0 * K) * a * a)};
  const std::array<double, 3> dphi2 = {a * a, 4.0 * a * b, 4.0 * b * b + 6.0 * a * g};
  const std::array<double, 3> tr_phi = {trC, 2.0 * a * b1, 2.0 * b * b1 + a * a * tbn2};
  for (int k = 0; k < 3; ++k) {
    double prod = 0.0;
    for (int i = 0; i <= k; ++i) prod += dphi2[i] * tr_phi[k - i];
    s.I2[k] = det_phi[k] + prod;
  }

  s.exact = [jet, p](double x3) { return exact_invariants(jet, p.value(x3), p.d1(x3)).inv; };
  return s;
}

Mat3 deformation_gradient(const SurfaceJet& jet, double phi, double dphi,
                          const std::optional<Vec2>& grad_phi) {
  Mat3 F;
  F.leftCols<2>() = jet.grad_y + phi * jet.grad_nu;
  if (grad_phi) F.leftCols<2>() += jet.normal * grad_phi->transpose();
  F.col(2) = dphi * jet.normal;
  return F;
}

ExactInvariants exact_invariants(const SurfaceJet& jet, double phi, double dphi,
                                 const std::optional<Vec2>& grad_phi) {
  ExactInvariants out;
  out.F = deformation_gradient(jet, phi, dphi, grad_phi);
  const double detF = out.F.determinant();
  if (detF == 0.0 || !std::isfinite(detF)) {
    throw DegenerateDeformationError("deformation gradient is singular");
  }
  out.Cf = out.F.transpose() * out.F;
  out.inv = principal_invariants(out.Cf);
  return out;
}

ExactInvariants exact_invariants(const ParametricSurface& surface, const Vec2& x,
                                 const ThicknessProfile& profile, double x3) {
  const SurfaceJet jet = evaluate_jet(surface, x);
  return exact_invariants(jet, profile_value(profile, x3), profile_d1(profile, x3));
}

Mat3 sqrt_spd(const Mat3& C) {
  const Eigen::SelfAdjointEigenSolver<Mat3> es(C);
  const Eigen::Vector3d ev = es.eigenvalues();
  if (!(ev.minCoeff() > 0.0)) throw AdmissibilityError("C_f is not positive definite");
  return es.eigenvectors() * ev.cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
}

double volumetric_energy(const MaterialModel& m, const Invariants& inv, const std::optional<Mat3>& Cf) {
  return std::visit(
      overloaded{
          [&](const Gent& g) {
            const double arg = 1.0 - (inv.I1 - 3.0) / g.Jm;
            if (!(arg > 0.0)) {
              std::ostringstream os;
              os.precision(17);
              os << "Gent stiffening limit violated: I1 - 3 = " << inv.I1 - 3.0 << " >= Jm = " << g.Jm;
              throw AdmissibilityError(os.str());
            }
            // log1p keeps the J_m → ∞ limit accurate
            return -0.5 * g.mu * g.Jm * std::log1p(-(inv.I1 - 3.0) / g.Jm);
          },
          [&](const NeoHookean& n) { return 0.5 * n.mu * (inv.I1 - 3.0); },
          [&](const MooneyRivlin& r) {
            return 0.5 * r.mu * (r.chi * (inv.I1 - 3.0) + (1.0 - r.chi) * (inv.I2 - 3.0));
          },
          [&](const CiarletGeymonat& c) {
            if (!(inv.I3 > 0.0)) throw AdmissibilityError("Ciarlet-Geymonat energy needs I3 > 0");
            return c.a * inv.I1 + c.b * inv.I3 - 0.5 * c.c * std::log(inv.I3) + c.d;
          },
          [&](const SVK& s) {
            if (!Cf) throw AdmissibilityError("SVK energy needs the full tensor C_f");
            const Mat3 U = sqrt_spd(*Cf) - Mat3::Identity();
            const double t = U.trace();
            return 0.5 * s.lambda * t * t + s.mu * (U * U).trace();
          }},
      m);
}

std::pair<double, double> molecular_params(double n, double N, double k, double T) {
  positive(n, "n");
  positive(k, "k");
  positive(T, "T");
  if (!(N > 1.0)) throw DomainError("molecular chain length N must exceed 1");
  return {n * k * T, 3.0 * (N - 1.0)};
}

double small_strain_energy(const std::variant<CiarletGeymonat, SVK>& m, const Mat3& E) {
  const Lame l = std::visit([](const auto& x) { return lame(x); }, m);
  const double t = E.trace();
  return 0.5 * l.lambda * t * t + l.mu * (E * E).trace();
}

}  // namespace plate
