#include "torus/operators.hpp"

#include <cmath>
#include <iomanip>
#include <random>

#include "torus/errors.hpp"

namespace torus {

namespace {
const cplx I(0.0, 1.0);

double checked_radius(const TorusParams& p, double x) {
  const double r = radius_profile(p, x);
  if (std::abs(r) < 1e-12) fail(ErrorKind::DegenerateGeometry, "R(x) vanishes");
  return r;
}
}  // namespace

std::vector<cplx> apply_sl(const SLProblem& p, const std::vector<cplx>& f, Stencil st, Exec ex) {
  return kernels::apply_sl(p.domain, sample_values(p.domain, p.sigma), sample_values(p.domain, p.rho), f,
                           st, ex);
}

W12Pair dirac_offdiag(const TorusParams& p, const GaugeField& f, double x) {
  const double r = checked_radius(p, x);
  const GaugeValue g = eval_gauge(f, p, x);
  W12Pair w;
  w.w1 = 0.5 * p.a * std::sin(x) - I * f.e / p.a * g.ax;
  w.w2 = -I * f.e * p.a / r * g.au;
  return w;
}

SpinorGF apply_dirac(const TorusParams& p, const GaugeField& f, int k, const Grid& grid,
                     const SpinorGF& s, Stencil st, Exec ex) {
  if (grid.boundary != Boundary::periodic) fail(ErrorKind::GridMismatch, "H_D acts on periodic grids");
  if (!same_grid(grid, s.psi1.grid) || !same_grid(grid, s.psi2.grid))
    fail(ErrorKind::GridMismatch, "spinor grid differs from operator grid");
  std::vector<cplx> m12(grid.n), m21(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.x(i);
    const double r = checked_radius(p, x);
    const W12Pair w = dirac_offdiag(p, f, x);
    // (i/R) d/du -> -k/R on exp(iku)
    m12[i] = -static_cast<double>(k) / r + w.w1 - I * w.w2;
    m21[i] = static_cast<double>(k) / r + w.w1 + I * w.w2;
  }
  SpinorGF out{{grid, {}}, {grid, {}}};
  kernels::apply_offdiag(grid, -1.0 / p.a, m12, m21, s.psi1.values, s.psi2.values, out.psi1.values,
                         out.psi2.values, st, ex);
  return out;
}

cplx sigma_constant_vf(const TorusParams& p, const GaugeField& f, double x) {
  const GaugeValue g = eval_gauge(f, p, x);
  return p.a * p.a * std::sin(x) - 2.0 * I * f.e * g.ax;
}

cplx rho_plus(const TorusParams& p, const GaugeField& f, int k, double x, RhoConvention conv) {
  const double a = p.a, e = f.e;
  const double r = checked_radius(p, x), dr = radius_derivative(p, x);
  const GaugeValue g = eval_gauge(f, p, x);
  const cplx q = k * a + a * a * e * g.au;
  const cplx t = e * g.ax + I * 0.5 * a * a * std::sin(x);
  const double au_prime_scale = conv == RhoConvention::printed ? a : a * a;
  return -I * e * g.dax + t * t + 0.5 * a * a * std::cos(x) + q * q / (r * r) +
         au_prime_scale * e * g.dau / r - k * a * dr / (r * r) - a * a * e * g.au * dr / (r * r);
}

std::pair<SLProblem, SLProblem> decouple_constant_vf(const TorusParams& p, const GaugeField& f, int k,
                                                     const Grid& grid, RhoConvention conv) {
  for (int i = 0; i < grid.n; ++i) checked_radius(p, grid.x(i));
  const GaugeField fm = f.negated_au();
  SLProblem plus, minus;
  plus.domain = minus.domain = grid;
  plus.sigma = [p, f](double x) { return sigma_constant_vf(p, f, x); };
  minus.sigma = plus.sigma;
  plus.rho = [p, f, k, conv](double x) { return rho_plus(p, f, k, x, conv); };
  minus.rho = [p, fm, k, conv](double x) { return rho_plus(p, fm, -k, x, conv); };
  plus.eigen_scale = minus.eigen_scale = p.a * p.a;
  plus.sector = Sector::plus;
  minus.sector = Sector::minus;
  plus.label = "constant-vf plus";
  minus.label = "constant-vf minus";
  return {plus, minus};
}

cplx F_plus_verbatim(const TorusParams& p, const GaugeField& f, int k, double x) {
  const double a = p.a, e = f.e;
  const double r = checked_radius(p, x), dr = radius_derivative(p, x);
  const GaugeValue g = eval_gauge(f, p, x);
  const cplx q = k * a + a * a * e * g.au;
  return e * e * g.ax * g.ax + 0.5 * a * a * std::cos(x) - 0.25 * std::pow(a, 4) * std::sin(x) +
         q * q / (r * r) + I * e * (a * a * g.ax * std::sin(x) - g.dax) + a * a / r * e * g.dau +
         a * dr * (static_cast<double>(k) + a * e * g.au) / (r * r);
}

cplx G_plus_verbatim(const TorusParams& p, const GaugeField& f, int k, double x) {
  const double a = p.a, e = f.e;
  const double r = checked_radius(p, x);
  const GaugeValue g = eval_gauge(f, p, x);
  return -I * e * g.ax + a * k / r + a * a * e * g.au / r + 0.5 * a * a * std::sin(x);
}

namespace {
// f_plus = (a^2/2) sin x - i e A_x + (a k + a^2 e A_u) / R
cplx f_plus(const TorusParams& p, const GaugeField& f, int k, double x) {
  const double a = p.a;
  const GaugeValue g = eval_gauge(f, p, x);
  return 0.5 * a * a * std::sin(x) - I * f.e * g.ax + (k * a + a * a * f.e * g.au) / radius_profile(p, x);
}
}  // namespace

PdfvProblem decouple_pdfv(const TorusParams& p, const GaugeField& f, int k, const FermiVelocity& vf,
                          const Grid& grid, Case2Transcription tr, Case2Reading rd) {
  double prev = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.x(i);
    checked_radius(p, x);
    const double v = eval_fermi_velocity(vf, p, x).v;
    if (std::abs(v) < 1e-12 || (i > 0 && v * prev < 0.0))
      fail(ErrorKind::VelocityZero, "V_F vanishes inside the domain");
    prev = v;
  }
  const GaugeField fm = f.negated_au();
  PdfvProblem out;
  if (tr == Case2Transcription::derived) {
    out.F_plus = [p, f, k](double x) { return rho_plus(p, f, k, x, RhoConvention::squared); };
    out.G_plus = [p, f, k](double x) { return f_plus(p, f, k, x); };
    out.F_minus = [p, fm, k](double x) { return rho_plus(p, fm, -k, x, RhoConvention::squared); };
    out.G_minus = [p, fm, k](double x) { return f_plus(p, fm, -k, x); };
  } else {
    out.F_plus = [p, f, k](double x) { return F_plus_verbatim(p, f, k, x); };
    out.G_plus = [p, f, k](double x) { return G_plus_verbatim(p, f, k, x); };
    out.F_minus = [p, fm, k](double x) { return F_plus_verbatim(p, fm, -k, x); };
    out.G_minus = [p, fm, k](double x) { return G_plus_verbatim(p, fm, -k, x); };
  }
  if (rd == Case2Reading::literal) {
    // Both displayed first-order equations are the same operator.
    out.F_minus = out.F_plus;
    out.G_minus = out.G_plus;
  }
  auto make = [&](const CplxFn& F, const CplxFn& G, Sector s) {
    SLProblem sl;
    sl.domain = grid;
    sl.sigma = [p, f, vf](double x) {
      const VfValue v = eval_fermi_velocity(vf, p, x);
      return sigma_constant_vf(p, f, x) - v.dv / v.v;
    };
    sl.rho = [p, vf, F, G](double x) {
      const VfValue v = eval_fermi_velocity(vf, p, x);
      return F(x) + G(x) * v.dv / v.v;
    };
    sl.eigen_scale = p.a * p.a;
    sl.eigen_weight = [p, vf](double x) {
      const double v = eval_fermi_velocity(vf, p, x).v;
      return 1.0 / (v * v);
    };
    sl.sector = s;
    sl.label = s == Sector::plus ? "pdfv plus" : "pdfv minus";
    return sl;
  };
  out.plus = make(out.F_plus, out.G_plus, Sector::plus);
  out.minus = make(out.F_minus, out.G_minus, Sector::minus);
  return out;
}

SpinorGF random_band_limited(const Grid& grid, int max_mode, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  SpinorGF s{{grid, std::vector<cplx>(grid.n, 0.0)}, {grid, std::vector<cplx>(grid.n, 0.0)}};
  for (auto* comp : {&s.psi1, &s.psi2}) {
    for (int m = -max_mode; m <= max_mode; ++m) {
      const cplx amp(nd(rng), nd(rng));
      for (int i = 0; i < grid.n; ++i) comp->values[i] += amp * std::exp(I * (m * grid.x(i)));
    }
  }
  return s;
}

double self_adjointness_defect(const TorusParams& p, const GaugeField& f, int k, const Grid& grid,
                               Measure m, int samples, std::uint64_t seed, Stencil st) {
  std::vector<double> w(grid.n, grid.h());
  if (m == Measure::curved)
    for (int i = 0; i < grid.n; ++i) w[i] *= p.a * radius_profile(p, grid.x(i));
  auto inner = [&](const SpinorGF& u, const SpinorGF& v) {
    cplx s = 0.0;
    for (int i = 0; i < grid.n; ++i)
      s += w[i] * (std::conj(u.psi1.values[i]) * v.psi1.values[i] +
                   std::conj(u.psi2.values[i]) * v.psi2.values[i]);
    return s;
  };
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const SpinorGF u = random_band_limited(grid, 6, seed + 2 * s);
    const SpinorGF v = random_band_limited(grid, 6, seed + 2 * s + 1);
    const SpinorGF hu = apply_dirac(p, f, k, grid, u, st);
    const SpinorGF hv = apply_dirac(p, f, k, grid, v, st);
    const double d = std::abs(inner(u, hv) - inner(hu, v)) /
                     std::sqrt(std::abs(inner(u, u)) * std::abs(inner(v, v)));
    worst = std::max(worst, d);
  }
  return worst;
}

void write_sl_csv(std::ostream& os, const SLProblem& sl) {
  os << "x,re_sigma,im_sigma,re_rho,im_rho\n";
  os << std::setprecision(17);
  for (int i = 0; i < sl.domain.n; ++i) {
    const double x = sl.domain.x(i);
    const cplx s = sl.sigma(x), r = sl.rho(x);
    os << x << ',' << s.real() << ',' << s.imag() << ',' << r.real() << ',' << r.imag() << '\n';
  }
}

double squaring_defect(const TorusParams& p, const GaugeField& f, int k, const Grid& grid, int samples,
                       std::uint64_t seed, int max_mode, Stencil st, Exec ex) {
  const auto [plus, minus] = decouple_constant_vf(p, f, k, grid, RhoConvention::squared);
  const double a2 = p.a * p.a;
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const SpinorGF psi = random_band_limited(grid, max_mode, seed + s);
    const SpinorGF h2 = apply_dirac(p, f, k, grid, apply_dirac(p, f, k, grid, psi, st, ex), st, ex);
    const auto l1 = apply_sl(plus, psi.psi1.values, st, ex);
    const auto l2 = apply_sl(minus, psi.psi2.values, st, ex);
    double dn = 0.0, ln = 0.0;
    for (int i = 0; i < grid.n; ++i) {
      dn += std::norm(a2 * h2.psi1.values[i] + l1[i]) + std::norm(a2 * h2.psi2.values[i] + l2[i]);
      ln += std::norm(l1[i]) + std::norm(l2[i]);
    }
    worst = std::max(worst, std::sqrt(dn / ln));
  }
  return worst;
}

}  // namespace torus
