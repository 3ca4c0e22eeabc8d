#pragma once

#include <memory>
#include <string>
#include <vector>

#include "torus/geometry.hpp"
#include "torus/grid.hpp"

namespace torus {

enum class AxKind { zero, hermitizing, cosine, tabulated };
enum class AuKind { zero, quadratic, linear, tabulated };

struct TabulatedSpline;

// Gauge field: an A_x family combined with an A_u family, plus the charge.
//   hermitizing: A_x = -i a^2 sin x / (2e)
//   cosine:      A_x = amp cos x (real, used for Hermiticity contrasts)
//   quadratic:   A_u = C2 R^2 + C3
//   linear:      A_u = a2 R - k_tie / (a e)
// Tabulated parts are periodic cubic B-splines over uniform samples on [0, 2pi).
struct GaugeField {
  double e = 1.0;
  AxKind ax = AxKind::zero;
  double ax_amp = 0.0;
  AuKind au = AuKind::zero;
  cplx C2 = 0.0;
  cplx C3 = 0.0;
  double a2 = 0.0;
  double k_tie = 0.0;
  std::shared_ptr<const TabulatedSpline> tab_ax;
  std::shared_ptr<const TabulatedSpline> tab_au;
  // "real" unless C2 was supplied with the C2 -> i C2 rotation.
  std::string c2_convention = "real";

  static GaugeField zero(double e = 1.0);
  static GaugeField hermitizing_ax(double e);
  static GaugeField cosine_ax(double e, double amp);
  static GaugeField quadratic_au(double e, cplx C2, cplx C3);
  // C3 = -k / (a e): the choice that cancels k in the counterpart potential.
  static GaugeField quadratic_au_tied(double e, cplx C2, int k, double a);
  static GaugeField linear_au(double e, double a2, int k);
  static GaugeField tabulated(double e, const std::vector<cplx>& ax, const std::vector<cplx>& au);

  // Attach the A_x part of another field.
  GaugeField with_ax(const GaugeField& other) const;
  // A_u -> -A_u, exact for every family.
  GaugeField negated_au() const;

  std::string describe() const;
};

struct GaugeValue {
  cplx ax = 0.0;
  cplx dax = 0.0;
  cplx au = 0.0;
  cplx dau = 0.0;
};

GaugeValue eval_gauge(const GaugeField& f, const TorusParams& p, double x);

enum class VfKind { constant, cosine, tabulated };

struct FermiVelocity {
  VfKind kind = VfKind::constant;
  double v_f = 1.0;
  double amplitude = 1.0;
  std::shared_ptr<const TabulatedSpline> tab;

  static FermiVelocity constant(double v);
  static FermiVelocity cosine(double amplitude);
  static FermiVelocity tabulated(const std::vector<double>& samples);
};

struct VfValue {
  double v = 0.0;
  double dv = 0.0;
  double d2v = 0.0;
};

VfValue eval_fermi_velocity(const FermiVelocity& v, const TorusParams& p, double x);

struct QuantumNumbers {
  int k = 1;
  double e = 1.0;
  double Delta = 0.0;
  double E = 0.0;
};

}  // namespace torus
