#include "torus/pseudoherm.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "torus/errors.hpp"
#include "torus/numerics.hpp"

namespace torus {

namespace {
const cplx I(0.0, 1.0);
}

cplx MathieuParams::eval(double x) const {
  const double s = std::sin(x);
  return A + B * std::cos(x) + C * s + D * s * s;
}

SLProblem schrodinger(const PotentialForm& v, const Grid& grid) {
  SLProblem sl;
  sl.domain = grid;
  sl.sigma = [](double) { return cplx(0.0); };
  sl.rho = v.v;
  sl.label = v.label;
  return sl;
}

FirstOrderOp eta2_case1(const TorusParams& p, double C1) {
  const double a = p.a;
  FirstOrderOp op;
  op.f = [a, C1](double x) {
    return cplx(C1 + std::pow(a, 4) * x / 4.0 - 0.5 * a * a * std::sin(x) -
                std::pow(a, 4) * std::sin(2.0 * x) / 8.0);
  };
  op.label = "eta2 constant-vf";
  op.secular = true;
  return op;
}

PotentialForm hermitian_counterpart_case1(const TorusParams& p, const GaugeField& f, int k) {
  if (f.au != AuKind::quadratic)
    fail(ErrorKind::FamilyMismatch, "counterpart potential needs the quadratic A_u family");
  PotentialForm v;
  v.v = [p, f, k](double x) {
    const double a = p.a, e = f.e;
    const double r = radius_profile(p, x), dr = radius_derivative(p, x);
    const GaugeValue g = eval_gauge(f, p, x);
    const cplx q = a * k + a * a * e * g.au;
    return q * q / (r * r) + a * e * g.dau / r - a * k * dr / (r * r) - a * a * e * g.au * dr / (r * r);
  };
  v.label = "hermitian-counterpart";
  return v;
}

MathieuParams mathieu_form(const TorusParams& p, double e, cplx C2) {
  const double a = p.a, c = p.c;
  const cplx q = C2 * C2 * e * e;
  MathieuParams m;
  m.A = std::pow(a, 4) * (a * a + c * c) * q;
  m.B = 2.0 * std::pow(a, 5) * c * q;
  m.C = e * C2 * a * a * (a - 2.0);
  m.D = -std::pow(a, 6) * q;
  return m;
}

PotentialForm counterpart_closed_form(const TorusParams& p, double e, cplx C2) {
  const MathieuParams m = mathieu_form(p, e, C2);
  return {[m](double x) { return m.eval(x); }, "counterpart-mathieu-form"};
}

cplx sqrt_a_minus_1(double a) { return std::sqrt(cplx(a - 1.0, 0.0)); }

Superpotential superpotential_case1(const TorusParams& p, double e, double scale) {
  const double a = p.a;
  if (a == 0.0) fail(ErrorKind::InvalidArgument, "a must be nonzero");
  const cplx s = sqrt_a_minus_1(a);
  const cplx lin = -I * s / a * scale;
  const cplx cst = I * (a - 2.0) / (2.0 * a);
  Superpotential sp;
  sp.W.f = [lin, cst](double x) { return lin * std::sin(x) + cst; };
  sp.W.label = "superpotential";
  sp.dW = [lin](double x) { return lin * std::cos(x); };
  sp.C2 = s / (std::pow(a, 4) * e);
  sp.c = a * a / (2.0 * std::sqrt(cplx(1.0 - a, 0.0)));
  sp.real_c = a < 1.0;
  sp.real_C2 = a > 1.0;
  return sp;
}

std::pair<PotentialForm, PotentialForm> partner_potentials_case1(const TorusParams& p) {
  const double a = p.a;
  const cplx s = sqrt_a_minus_1(a);
  auto common = [a, s](double x) {
    const double c = std::cos(x);
    return (a - 1.0) / (a * a) * c * c + (a - 2.0) / (a * a) * s * std::sin(x) - 0.25;
  };
  PotentialForm v{[common, s, a](double x) { return common(x) + I * s / a * std::cos(x); }, "partner V"};
  PotentialForm v1{[common, s, a](double x) { return common(x) - I * s / a * std::cos(x); }, "partner V1"};
  return {v, v1};
}

FactorizationDefect factorization_defect(const TorusParams& p, int points, double scale) {
  const Superpotential sp = superpotential_case1(p, 1.0, scale);
  const auto [v, v1] = partner_potentials_case1(p);
  FactorizationDefect d;
  for (int i = 0; i < points; ++i) {
    const double x = 2.0 * std::numbers::pi * i / points;
    const cplx w = sp.W.f(x), dw = sp.dW(x);
    d.minus = std::max(d.minus, std::abs(w * w - dw - v.v(x)));
    d.plus = std::max(d.plus, std::abs(w * w + dw - v1.v(x)));
  }
  return d;
}

MultiplicativeOp eta1_case1(const TorusParams& p) {
  const double a = p.a;
  const cplx s = sqrt_a_minus_1(a);
  return {[a, s](double x) { return I * (2.0 - a) / (2.0 * a) + I * s / a * std::sin(x); }, "eta1"};
}

FirstOrderOp eta2_case2(const TorusParams& p, double C2) {
  const double a = p.a;
  FirstOrderOp op;
  op.f = [a, C2](double x) {
    return cplx(std::pow(a, 4) / 16.0 + C2 + 0.75 * a * a * std::sin(x) -
                std::pow(a, 4) / 32.0 * std::sin(2.0 * x));
  };
  op.label = "eta2 pdfv";
  return op;
}

namespace {

bool near_tan_pole(double x, double tol) {
  const double y = std::remainder(x - 0.5 * std::numbers::pi, std::numbers::pi);
  return std::abs(y) < tol;
}

// int_{x0}^{x} f by Simpson on 2*64 panels
cplx integral(const CplxFn& f, double x0, double x) {
  const int m = 129;
  const double h = (x - x0) / (m - 1);
  if (h == 0.0) return 0.0;
  std::vector<cplx> s(m);
  for (int i = 0; i < m; ++i) s[i] = f(x0 + i * h);
  return integrate_simpson(s, h);
}

}  // namespace

GridFunction prefactor_case2(const TorusParams& p, const GaugeField& f, const Grid& grid) {
  for (int i = 0; i < grid.n; ++i)
    if (near_tan_pole(grid.x(i), 1e-6)) fail(ErrorKind::DomainSingularity, "grid touches a pole of tan x");
  const double a = p.a;
  CplxFn ax = [p, f](double x) { return eval_gauge(f, p, x).ax; };
  GridFunction out{grid, std::vector<cplx>(grid.n)};
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.x(i);
    const cplx iax = f.ax == AxKind::zero ? cplx(0.0) : integral(ax, 0.0, x);
    // int tan = -ln|cos|, int sin = 1 - cos (both from 0)
    const cplx expo = I * f.e * iax - 0.5 * a * a * (1.0 - std::cos(x)) - 0.5 * std::log(std::abs(std::cos(x)));
    out.values[i] = std::exp(expo);
  }
  return out;
}

PotentialForm veff_case2(const TorusParams& p, const GaugeField& f, int k, const FermiVelocity& vf) {
  if (f.au != AuKind::linear) fail(ErrorKind::FamilyMismatch, "effective potential needs the linear A_u family");
  if (vf.kind != VfKind::cosine) fail(ErrorKind::FamilyMismatch, "effective potential needs the cosine V_F profile");
  PotentialForm v;
  v.v = [p, f, k, vf](double x) {
    const double a = p.a, e = f.e;
    const double r = radius_profile(p, x), dr = radius_derivative(p, x);
    const GaugeValue g = eval_gauge(f, p, x);
    const VfValue w = eval_fermi_velocity(vf, p, x);
    const cplx q = g.au * a * e + static_cast<double>(k);
    return -w.dv * w.dv / (4.0 * w.v * w.v) + w.d2v / (2.0 * w.v) + q * q / (r * r) - a * e * g.dau / r +
           (static_cast<double>(k) + a * e * g.au) * dr / (r * r) - k * w.dv / (r * w.v) -
           a * e * g.au * w.dv / (r * w.v);
  };
  v.label = "effective-potential";
  return v;
}

PotentialForm veff_rosen_morse(double a, double e, double a2) {
  return {[a, e, a2](double x) {
            const double t = std::tan(x);
            return cplx(a * a * a2 * a2 * e * e - 0.5 + a2 * e * a * t - 0.25 * t * t);
          },
          "rosen-morse-ii"};
}

namespace {
cplx sigma_prime(const SLProblem& sl, double x) {
  const double h = 1e-3;
  return (-sl.sigma(x + 2 * h) + 8.0 * sl.sigma(x + h) - 8.0 * sl.sigma(x - h) + sl.sigma(x - 2 * h)) /
         (12.0 * h);
}
}  // namespace

PotentialForm remove_first_derivative(const SLProblem& sl) {
  PotentialForm u;
  u.v = [sl](double x) {
    const cplx s = sl.sigma(x);
    return sl.rho(x) + 0.25 * s * s - 0.5 * sigma_prime(sl, x);
  };
  u.label = "gauge-transformed " + sl.label;
  return u;
}

CplxFn gauge_prefactor(const SLProblem& sl, double x0) {
  return [sl, x0](double x) { return std::exp(0.5 * integral(sl.sigma, x0, x)); };
}

double gauge_mapping_residual(const SLProblem& sl, const CplxFn& prefactor, const PotentialForm& u,
                              const std::vector<GridFunction>& testset, Stencil st) {
  const Grid& g = sl.domain;
  const std::vector<cplx> pf = sample_values(g, prefactor);
  const std::vector<cplx> zero(g.n, 0.0), uv = sample_values(g, u.v);
  double worst = 0.0;
  for (const auto& phi : testset) {
    if (!same_grid(phi.grid, g)) fail(ErrorKind::GridMismatch, "test function on a different grid");
    std::vector<cplx> pphi(g.n);
    for (int i = 0; i < g.n; ++i) pphi[i] = pf[i] * phi.values[i];
    const auto lhs = apply_sl(sl, pphi, st);
    auto rhs = kernels::apply_sl(g, zero, uv, phi.values, st);
    for (int i = 0; i < g.n; ++i) rhs[i] = lhs[i] - pf[i] * rhs[i];
    worst = std::max(worst, kernels::norm_l2(g, rhs) / kernels::norm_l2(g, pphi));
  }
  return worst;
}

double intertwining_residual(const Intertwiner& eta, const SLProblem& h, const SLProblem& h_target,
                             const std::vector<GridFunction>& testset, Stencil st, Exec ex) {
  const Grid& g = h.domain;
  if (!same_grid(g, h_target.domain)) fail(ErrorKind::GridMismatch, "operators on different grids");
  const auto sig = sample_values(g, h.sigma), rho = sample_values(g, h.rho);
  const auto tsig = sample_values(g, h_target.sigma), trho = sample_values(g, h_target.rho);
  auto apply_eta = [&](const std::vector<cplx>& f) {
    if (const auto* fo = std::get_if<FirstOrderOp>(&eta))
      return kernels::apply_first_order(g, sample_values(g, fo->f), f, st, ex);
    const auto& mo = std::get<MultiplicativeOp>(eta);
    std::vector<cplx> out(g.n);
    for (int i = 0; i < g.n; ++i) out[i] = mo.m(g.x(i)) * f[i];
    return out;
  };
  double worst = 0.0;
  for (const auto& phi : testset) {
    if (!same_grid(phi.grid, g)) fail(ErrorKind::GridMismatch, "test function on a different grid");
    const auto a = apply_eta(kernels::apply_sl(g, sig, rho, phi.values, st, ex));
    const auto b = kernels::apply_sl(g, tsig, trho, apply_eta(phi.values), st, ex);
    std::vector<cplx> d(g.n);
    for (int i = 0; i < g.n; ++i) d[i] = a[i] - b[i];
    worst = std::max(worst, kernels::norm_l2(g, d, ex) / kernels::norm_l2(g, phi.values, ex));
  }
  return worst;
}

std::vector<GridFunction> bump_testset(const Grid& grid, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double lo = grid.x_min, hi = grid.x_max, len = hi - lo;
  std::vector<GridFunction> set;
  for (int j = 0; j < count; ++j) {
    const double width = len * (0.15 + 0.2 * u(rng));
    const double centre = lo + width + (len - 2.0 * width) * u(rng);
    const double freq = 1.0 + 3.0 * u(rng);
    const double phase = 2.0 * std::numbers::pi * u(rng);
    GridFunction f{grid, std::vector<cplx>(grid.n, 0.0)};
    for (int i = 0; i < grid.n; ++i) {
      const double s = (grid.x(i) - centre) / width;
      if (std::abs(s) < 1.0) f.values[i] = std::exp(-1.0 / (1.0 - s * s)) * std::exp(I * (freq * grid.x(i) + phase));
    }
    set.push_back(std::move(f));
  }
  return set;
}

}  // namespace torus
