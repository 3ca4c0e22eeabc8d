#include "torus/fields.hpp"

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>
#include <cmath>
#include <numbers>
#include <sstream>

#include "torus/errors.hpp"

namespace torus {

using boost::math::interpolators::cardinal_cubic_b_spline;

// Periodic spline: the samples are padded by three points on each side so
// the end conditions do not matter inside [0, 2pi).
struct TabulatedSpline {
  std::vector<cardinal_cubic_b_spline<double>> parts;  // re, im
  double period = 2.0 * std::numbers::pi;

  explicit TabulatedSpline(const std::vector<cplx>& s) {
    const int n = static_cast<int>(s.size());
    if (n < 16) fail(ErrorKind::InvalidArgument, "tabulated field needs at least 16 samples");
    const double h = period / n;
    const int pad = 3;
    for (int part = 0; part < 2; ++part) {
      std::vector<double> y;
      for (int i = -pad; i < n + pad; ++i) {
        const cplx v = s[((i % n) + n) % n];
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
          fail(ErrorKind::InvalidArgument, "tabulated field sample not finite");
        y.push_back(part == 0 ? v.real() : v.imag());
      }
      parts.emplace_back(y.begin(), y.end(), -pad * h, h);
    }
  }

  double wrap(double x) const {
    double t = std::fmod(x, period);
    if (t < 0) t += period;
    return t;
  }
  cplx value(double x) const {
    const double t = wrap(x);
    return {parts[0](t), parts[1](t)};
  }
  cplx prime(double x) const {
    const double t = wrap(x);
    return {parts[0].prime(t), parts[1].prime(t)};
  }
  cplx double_prime(double x) const {
    const double t = wrap(x);
    return {parts[0].double_prime(t), parts[1].double_prime(t)};
  }
};

namespace {
void need_charge(double e) {
  if (e == 0.0) fail(ErrorKind::ChargeZero, "charge e must be nonzero for this field family");
}
}  // namespace

GaugeField GaugeField::zero(double e) {
  GaugeField f;
  f.e = e;
  return f;
}

GaugeField GaugeField::hermitizing_ax(double e) {
  need_charge(e);
  GaugeField f;
  f.e = e;
  f.ax = AxKind::hermitizing;
  return f;
}

GaugeField GaugeField::cosine_ax(double e, double amp) {
  GaugeField f;
  f.e = e;
  f.ax = AxKind::cosine;
  f.ax_amp = amp;
  return f;
}

GaugeField GaugeField::quadratic_au(double e, cplx C2, cplx C3) {
  need_charge(e);
  GaugeField f;
  f.e = e;
  f.au = AuKind::quadratic;
  f.C2 = C2;
  f.C3 = C3;
  if (C2.real() == 0.0 && C2.imag() != 0.0) f.c2_convention = "rotated (C2 -> i C2)";
  return f;
}

GaugeField GaugeField::quadratic_au_tied(double e, cplx C2, int k, double a) {
  need_charge(e);
  return quadratic_au(e, C2, -static_cast<double>(k) / (a * e));
}

GaugeField GaugeField::linear_au(double e, double a2, int k) {
  need_charge(e);
  GaugeField f;
  f.e = e;
  f.au = AuKind::linear;
  f.a2 = a2;
  f.k_tie = k;
  return f;
}

GaugeField GaugeField::tabulated(double e, const std::vector<cplx>& ax, const std::vector<cplx>& au) {
  GaugeField f;
  f.e = e;
  f.ax = AxKind::tabulated;
  f.au = AuKind::tabulated;
  f.tab_ax = std::make_shared<TabulatedSpline>(ax);
  f.tab_au = std::make_shared<TabulatedSpline>(au);
  return f;
}

GaugeField GaugeField::with_ax(const GaugeField& other) const {
  GaugeField f = *this;
  f.ax = other.ax;
  f.ax_amp = other.ax_amp;
  f.tab_ax = other.tab_ax;
  return f;
}

GaugeField GaugeField::negated_au() const {
  GaugeField f = *this;
  f.C2 = -C2;
  f.C3 = -C3;
  f.a2 = -a2;
  f.k_tie = -k_tie;
  if (au == AuKind::tabulated) {
    const int n = 64;
    std::vector<cplx> s(n);
    for (int i = 0; i < n; ++i) s[i] = -tab_au->value(2.0 * std::numbers::pi * i / n);
    f.tab_au = std::make_shared<TabulatedSpline>(s);
  }
  return f;
}

std::string GaugeField::describe() const {
  std::ostringstream os;
  os << "e=" << e << " ax=";
  switch (ax) {
    case AxKind::zero: os << "zero"; break;
    case AxKind::hermitizing: os << "hermitizing"; break;
    case AxKind::cosine: os << "cosine(" << ax_amp << ")"; break;
    case AxKind::tabulated: os << "tabulated"; break;
  }
  os << " au=";
  switch (au) {
    case AuKind::zero: os << "zero"; break;
    case AuKind::quadratic: os << "quadratic(C2=" << C2 << ",C3=" << C3 << "," << c2_convention << ")"; break;
    case AuKind::linear: os << "linear(a2=" << a2 << ",k=" << k_tie << ")"; break;
    case AuKind::tabulated: os << "tabulated"; break;
  }
  return os.str();
}

GaugeValue eval_gauge(const GaugeField& f, const TorusParams& p, double x) {
  GaugeValue g;
  const double s = std::sin(x), c = std::cos(x);
  switch (f.ax) {
    case AxKind::zero: break;
    case AxKind::hermitizing:
      need_charge(f.e);
      g.ax = cplx(0.0, -p.a * p.a * s / (2.0 * f.e));
      g.dax = cplx(0.0, -p.a * p.a * c / (2.0 * f.e));
      break;
    case AxKind::cosine:
      g.ax = f.ax_amp * c;
      g.dax = -f.ax_amp * s;
      break;
    case AxKind::tabulated:
      g.ax = f.tab_ax->value(x);
      g.dax = f.tab_ax->prime(x);
      break;
  }
  const double r = radius_profile(p, x), dr = radius_derivative(p, x);
  switch (f.au) {
    case AuKind::zero: break;
    case AuKind::quadratic:
      need_charge(f.e);
      g.au = f.C2 * r * r + f.C3;
      g.dau = 2.0 * f.C2 * r * dr;
      break;
    case AuKind::linear:
      need_charge(f.e);
      g.au = f.a2 * r - f.k_tie / (p.a * f.e);
      g.dau = f.a2 * dr;
      break;
    case AuKind::tabulated:
      g.au = f.tab_au->value(x);
      g.dau = f.tab_au->prime(x);
      break;
  }
  return g;
}

FermiVelocity FermiVelocity::constant(double v) {
  if (!(v > 0.0)) fail(ErrorKind::InvalidArgument, "constant Fermi velocity must be > 0");
  FermiVelocity f;
  f.kind = VfKind::constant;
  f.v_f = v;
  return f;
}

FermiVelocity FermiVelocity::cosine(double amplitude) {
  FermiVelocity f;
  f.kind = VfKind::cosine;
  f.amplitude = amplitude;
  return f;
}

FermiVelocity FermiVelocity::tabulated(const std::vector<double>& samples) {
  FermiVelocity f;
  f.kind = VfKind::tabulated;
  std::vector<cplx> s(samples.begin(), samples.end());
  f.tab = std::make_shared<TabulatedSpline>(s);
  return f;
}

VfValue eval_fermi_velocity(const FermiVelocity& v, const TorusParams&, double x) {
  switch (v.kind) {
    case VfKind::constant: return {v.v_f, 0.0, 0.0};
    case VfKind::cosine:
      return {v.amplitude * std::cos(x), -v.amplitude * std::sin(x), -v.amplitude * std::cos(x)};
    case VfKind::tabulated:
      return {v.tab->value(x).real(), v.tab->prime(x).real(), v.tab->double_prime(x).real()};
  }
  return {};
}

}  // namespace torus
