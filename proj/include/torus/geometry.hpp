#pragma once

#include <array>
#include <string>
#include <vector>

namespace torus {

// Tube radius a multiplies dv^2, c is the radius of the centre circle.
struct TorusParams {
  double a = 0.5;
  double c = 2.0;

  // Throws on a <= 0, c <= 0 or c == a. Returns warnings (e.g. R(x) changes sign).
  std::vector<std::string> validate() const;
};

using Mat3 = std::array<std::array<double, 3>, 3>;

struct ChristoffelSet {
  double gamma_2_12 = 0.0;  // Gamma^u_{xu}
  double gamma_1_22 = 0.0;  // Gamma^x_{uu}
};

double radius_profile(const TorusParams& p, double x);
double radius_derivative(const TorusParams& p, double x);
double radius_second_derivative(const TorusParams& p, double x);

// (t, x, u) ordering throughout.
Mat3 metric_at(const TorusParams& p, double x);
Mat3 vierbein_at(const TorusParams& p, double x);
Mat3 minkowski();
// e^T eta e, the metric rebuilt from the frame.
Mat3 metric_from_frame(const Mat3& e);

ChristoffelSet christoffel_at(const TorusParams& p, double x);

// Coefficient of gamma_1 gamma_2 in Gamma_u, as printed: (a/2) R sin x.
double spin_connection_printed(const TorusParams& p, double x);

// Coefficient of gamma_1 gamma_2 in Gamma_u from the frame contraction
// 1/2 S^{ab} e_a^nu g_{rho nu} D_u e_b^rho with S^{12} = gamma_1 gamma_2 / 2.
double spin_connection_derived(const TorusParams& p, double x);

// Same contraction with caller-supplied Christoffel symbols; used by the
// finite-difference oracle.
double spin_connection_contract(const TorusParams& p, double x, const ChristoffelSet& gam);

struct SpinConnectionReport {
  double printed = 0.0;
  double derived = 0.0;
  double difference = 0.0;
};
SpinConnectionReport compare_spin_connection(const TorusParams& p, double x);

// Levi-Civita symbols from central differences of the metric with step h.
ChristoffelSet christoffel_fd(const TorusParams& p, double x, double h);

struct GeometryChecks {
  double frame_defect = 0.0;     // max |g - e^T eta e|
  double christoffel_err_h = 0.0;
  double christoffel_err_h2 = 0.0;
  double christoffel_order = 0.0;
  double spin_max_diff = 0.0;    // max |printed - derived|
};
// Sampled over `samples` points of [0, 2pi); FD steps h and h/2.
GeometryChecks geometry_checks(const TorusParams& p, int samples = 64, double h = 1e-3);

}  // namespace torus
