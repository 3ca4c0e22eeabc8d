#include "torus/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "torus/errors.hpp"

namespace torus {

std::vector<std::string> TorusParams::validate() const {
  if (!(a > 0.0)) fail(ErrorKind::InvalidArgument, "tube radius a must be > 0");
  if (!(c > 0.0)) fail(ErrorKind::InvalidArgument, "centre radius c must be > 0");
  if (c == a) fail(ErrorKind::InvalidArgument, "torus needs c != a");
  std::vector<std::string> warnings;
  if (c < a) warnings.push_back("c < a: R(x) = c + a cos x changes sign");
  return warnings;
}

double radius_profile(const TorusParams& p, double x) { return p.c + p.a * std::cos(x); }
double radius_derivative(const TorusParams& p, double x) { return -p.a * std::sin(x); }
double radius_second_derivative(const TorusParams& p, double x) { return -p.a * std::cos(x); }

Mat3 metric_at(const TorusParams& p, double x) {
  const double r = radius_profile(p, x);
  Mat3 g{};
  g[0][0] = 1.0;
  g[1][1] = -p.a * p.a;
  g[2][2] = -r * r;
  return g;
}

Mat3 vierbein_at(const TorusParams& p, double x) {
  Mat3 e{};
  e[0][0] = 1.0;
  e[1][1] = p.a;
  e[2][2] = radius_profile(p, x);
  return e;
}

Mat3 minkowski() {
  Mat3 eta{};
  eta[0][0] = 1.0;
  eta[1][1] = -1.0;
  eta[2][2] = -1.0;
  return eta;
}

Mat3 metric_from_frame(const Mat3& e) {
  const Mat3 eta = minkowski();
  Mat3 g{};
  for (int mu = 0; mu < 3; ++mu)
    for (int nu = 0; nu < 3; ++nu) {
      double s = 0.0;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) s += e[a][mu] * e[b][nu] * eta[a][b];
      g[mu][nu] = s;
    }
  return g;
}

ChristoffelSet christoffel_at(const TorusParams& p, double x) {
  const double r = radius_profile(p, x);
  if (std::abs(r) < 1e-12) fail(ErrorKind::DegenerateGeometry, "R(x) vanishes");
  const double s = std::sin(x);
  return {-p.a * s / r, r * s / p.a};
}

double spin_connection_printed(const TorusParams& p, double x) {
  return 0.5 * p.a * radius_profile(p, x) * std::sin(x);
}

double spin_connection_contract(const TorusParams& p, double x, const ChristoffelSet& gam) {
  // Spatial indices: 1 = x, 2 = u. Frame is diagonal and u-independent, so
  // D_u e_b^rho reduces to Gamma^rho_{u lambda} e_b^lambda.
  const double r = radius_profile(p, x);
  const double inv_e1 = 1.0 / p.a;  // e_1^x
  const double inv_e2 = 1.0 / r;    // e_2^u
  const double g11 = -p.a * p.a;
  const double g22 = -r * r;
  // D_u e_2^x = Gamma^x_{uu} e_2^u ; D_u e_1^u = Gamma^u_{ux} e_1^x
  const double x12 = inv_e1 * g11 * (gam.gamma_1_22 * inv_e2);
  const double x21 = inv_e2 * g22 * (gam.gamma_2_12 * inv_e1);
  return 0.25 * (x12 - x21);
}

double spin_connection_derived(const TorusParams& p, double x) {
  return spin_connection_contract(p, x, christoffel_at(p, x));
}

SpinConnectionReport compare_spin_connection(const TorusParams& p, double x) {
  SpinConnectionReport r;
  r.printed = spin_connection_printed(p, x);
  r.derived = spin_connection_derived(p, x);
  r.difference = r.printed - r.derived;
  return r;
}

ChristoffelSet christoffel_fd(const TorusParams& p, double x, double h) {
  const Mat3 gp = metric_at(p, x + h), gm = metric_at(p, x - h), g = metric_at(p, x);
  // diagonal metric depending on x only: Gamma^l_{mn} = (g^ll / 2)(d_m g_ln + d_n g_lm - d_l g_mn)
  const double dguu = (gp[2][2] - gm[2][2]) / (2.0 * h);
  ChristoffelSet s;
  s.gamma_2_12 = 0.5 / g[2][2] * dguu;
  s.gamma_1_22 = -0.5 / g[1][1] * dguu;
  return s;
}

GeometryChecks geometry_checks(const TorusParams& p, int samples, double h) {
  p.validate();
  GeometryChecks out;
  for (int i = 0; i < samples; ++i) {
    const double x = 2.0 * std::numbers::pi * (i + 0.37) / samples;
    const Mat3 g = metric_at(p, x), ge = metric_from_frame(vierbein_at(p, x));
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) out.frame_defect = std::max(out.frame_defect, std::abs(g[r][c] - ge[r][c]));
    const ChristoffelSet ex = christoffel_at(p, x);
    auto err = [&](double step) {
      const ChristoffelSet fd = christoffel_fd(p, x, step);
      return std::max(std::abs(fd.gamma_2_12 - ex.gamma_2_12), std::abs(fd.gamma_1_22 - ex.gamma_1_22));
    };
    out.christoffel_err_h = std::max(out.christoffel_err_h, err(h));
    out.christoffel_err_h2 = std::max(out.christoffel_err_h2, err(h / 2));
    out.spin_max_diff = std::max(out.spin_max_diff, std::abs(compare_spin_connection(p, x).difference));
  }
  out.christoffel_order = std::log2(out.christoffel_err_h / out.christoffel_err_h2);
  return out;
}

}  // namespace torus
