#include "torus/analytic.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "torus/errors.hpp"

namespace torus {

namespace {
const cplx I(0.0, 1.0);
constexpr double kPi = std::numbers::pi;
}  // namespace

MorseChain case1_transform_chain(const MathieuParams& m, double alpha, int samples) {
  MorseChain ch;
  ch.alpha = alpha;
  ch.mathieu = m;
  ch.c0 = m.A + m.B;
  ch.c1 = I * m.C;
  ch.c2 = 0.5 * (m.B - I * m.C - 2.0 * m.D);
  ch.c1_true = -I * m.C;
  ch.c2_true = 0.5 * (m.B + I * m.C - 2.0 * m.D);
  for (int i = 0; i < samples; ++i) {
    const double x = 2.0 * kPi * i / samples;
    const cplx z = std::exp(I * x);
    const cplx exact = m.A + 0.5 * m.D + 0.5 * (m.B - I * m.C) * z + 0.5 * (m.B + I * m.C) / z -
                       0.25 * m.D * (z * z + 1.0 / (z * z));
    const cplx w = z - 1.0;
    ch.truncation_printed = std::max(ch.truncation_printed, std::abs(exact - (ch.c0 + ch.c1 * w + ch.c2 * w * w)));
    ch.truncation_corrected =
        std::max(ch.truncation_corrected, std::abs(exact - (ch.c0 + ch.c1_true * w + ch.c2_true * w * w)));
  }
  return ch;
}

CplxFn transformed_potential(const MathieuParams& m, double alpha) {
  const cplx q = m.B - I * m.C - 2.0 * m.D;
  return [m, q, alpha](double t) {
    const double y = std::exp(-alpha * t);
    return -alpha * alpha * (I * m.C * y + 0.5 * q * (y * y - 2.0 * y));
  };
}

Case1Energy case1_energy(int n, double alpha, const MathieuParams& m) {
  const cplx d = m.D - 0.5 * (m.B + m.C);
  if (std::abs(d) < 1e-14) fail(ErrorKind::SingularParameter, "D - (B+C)/2 vanishes");
  Case1Energy r;
  r.root = std::sqrt(d);
  const cplx br = 2.0 * n + 1.0 - alpha * (2.0 * m.D - m.B - 2.0 * m.C) / r.root;
  r.energy_sq = -alpha * alpha / 4.0 * br * br;
  r.real = std::abs(r.energy_sq.imag()) <= 1e-12 * std::max(1.0, std::abs(r.energy_sq));
  return r;
}

MathieuParams case1_real_branch(double a, double e) {
  if (!(a > 0.0 && a < 1.0)) fail(ErrorKind::InvalidArgument, "real branch needs 0 < a < 1");
  const Superpotential sp = superpotential_case1({a, 2.0}, e);
  MathieuParams m = mathieu_form({a, sp.c.real()}, e, sp.C2);
  m.C = 0.0;
  return m;
}

double MorseLevels::level(int n) const {
  const double p = kappa - n - 0.5;
  return -alpha * alpha * p * p;
}

MorseLevels morse_levels(const MathieuParams& m, double alpha) {
  if (std::abs(m.C) > 1e-14 || std::abs(m.B.imag()) > 1e-14 || std::abs(m.D.imag()) > 1e-14)
    fail(ErrorKind::InvalidArgument, "Morse form needs C = 0 and real B, D");
  const double k2 = m.D.real() - 0.5 * m.B.real();
  if (!(k2 > 0.0)) fail(ErrorKind::NotConfining, "D - B/2 must be positive for a Morse well");
  MorseLevels ml;
  ml.alpha = alpha;
  ml.kappa = std::sqrt(k2);
  ml.bound = static_cast<int>(std::ceil(ml.kappa - 0.5));
  if (ml.bound < 0) ml.bound = 0;
  return ml;
}

const char* to_string(WaveReading r) {
  switch (r) {
    case WaveReading::s_inv_alpha: return "z=s,gamma=1/alpha";
    case WaveReading::s_alpha_kappa: return "z=s,gamma=alpha*kappa";
    case WaveReading::exp_inv_alpha: return "z=exp(-alpha t),gamma=1/alpha";
    case WaveReading::exp_alpha_kappa: return "z=exp(-alpha t),gamma=alpha*kappa";
  }
  return "?";
}

Case1Solution case1_solution(int n, double alpha, const MathieuParams& m) {
  const Case1Energy en = case1_energy(n, alpha, m);
  Case1Solution sol;
  sol.n = n;
  sol.alpha = alpha;
  sol.mathieu = m;
  sol.energy_sq = en.energy_sq;
  sol.kappa = en.root;
  // mu = +- i sqrt(E) / (2 alpha); keep the sign with Re(2 mu) > 0
  cplx mu = I * std::sqrt(en.energy_sq) / (2.0 * alpha);
  if (mu.real() < 0.0) mu = -mu;
  sol.mu = mu;
  sol.laguerre_order = 4.0 * mu;
  sol.bounded = (2.0 * mu).real() > 0.0;
  return sol;
}

double case1_s(const Case1Solution& sol, double t) {
  return (sol.alpha * sol.kappa * std::exp(-sol.alpha * t)).real();
}

cplx case1_wavefunction(const Case1Solution& sol, double t) {
  const cplx s = sol.alpha * sol.kappa * std::exp(-sol.alpha * t);
  const bool z_is_s = sol.reading == WaveReading::s_inv_alpha || sol.reading == WaveReading::s_alpha_kappa;
  const bool inv = sol.reading == WaveReading::s_inv_alpha || sol.reading == WaveReading::exp_inv_alpha;
  const cplx z = z_is_s ? s : cplx(std::exp(-sol.alpha * t));
  const cplx gamma = inv ? cplx(1.0 / sol.alpha) : sol.alpha * sol.kappa;
  return std::pow(z, 2.0 * sol.mu) * std::exp(-z / sol.alpha) *
         laguerre_gen(sol.n, sol.laguerre_order, 2.0 * gamma * s);
}

double schrodinger_residual(const CplxFn& psi, const CplxFn& u, cplx lambda, double lo, double hi,
                            int n_grid) {
  const double h = (hi - lo) / (n_grid - 1);
  std::vector<cplx> f(n_grid);
  double fmax = 0.0;
  for (int i = 0; i < n_grid; ++i) {
    f[i] = psi(lo + i * h);
    fmax = std::max(fmax, std::abs(f[i]));
  }
  double worst = 0.0;
  for (int i = 2; i + 2 < n_grid; ++i) {
    const cplx d2 = (-f[i + 2] + 16.0 * f[i + 1] - 30.0 * f[i] + 16.0 * f[i - 1] - f[i - 2]) / (12.0 * h * h);
    const cplx r = -d2 + u(lo + i * h) * f[i] - lambda * f[i];
    worst = std::max(worst, std::abs(r));
  }
  return worst / (fmax * std::max(1.0, std::abs(lambda)));
}

void calibrate_case1(Case1Solution& sol, double t_min, double t_max, int n_grid) {
  const CplxFn u = transformed_potential(sol.mathieu, sol.alpha);
  const WaveReading all[4] = {WaveReading::s_inv_alpha, WaveReading::s_alpha_kappa, WaveReading::exp_inv_alpha,
                              WaveReading::exp_alpha_kappa};
  double best = std::numeric_limits<double>::infinity();
  WaveReading pick = sol.reading;
  for (int j = 0; j < 4; ++j) {
    Case1Solution trial = sol;
    trial.reading = all[j];
    const double r = schrodinger_residual([&](double t) { return case1_wavefunction(trial, t); }, u,
                                          sol.energy_sq, t_min, t_max, n_grid);
    sol.reading_residuals[j] = r;
    if (r < best) {
      best = r;
      pick = all[j];
    }
  }
  sol.reading = pick;
}

Case2HypParams case2_hyp_params(double alpha, double C1, double eps, BetaBranch br) {
  Case2HypParams h;
  const double arg = -1.0 - 4.0 * C1 + alpha * alpha + 4.0 * eps * eps;
  h.beta_real = arg >= 0.0;
  h.beta = 0.25 * std::sqrt(cplx(arg, 0.0));
  if (br == BetaBranch::negative) h.beta = -h.beta;
  h.gamma = 1.0 + 2.0 * h.beta - I * alpha / 2.0;
  const cplx disc = std::sqrt(5.0 + 16.0 * C1 - 4.0 * alpha * alpha + 8.0 * h.beta + 16.0 * h.beta * h.beta -
                              16.0 * eps * eps);
  h.a_disp = 0.5 + 2.0 * h.beta + 0.5 * disc;
  h.b_disp = 0.5 + 2.0 * h.beta - 0.5 * disc;
  h.a_match = h.b_match = 0.5 + 2.0 * h.beta;
  return h;
}

Case2Solution case2_quantize(int n, double alpha, double C1) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "level index must be >= 0");
  auto f = [&](double e2) {
    return case2_hyp_params(alpha, C1, std::sqrt(std::max(e2, 0.0)), BetaBranch::negative).a_match.real() + n;
  };
  std::vector<double> ladder{0.0};
  for (int i = 0; i < 200; ++i) ladder.push_back(1e-6 * std::pow(1e10, i / 199.0));
  double root = -1.0;
  for (size_t i = 0; i < ladder.size(); ++i) {
    const double fi = f(ladder[i]);
    if (std::abs(fi) < 1e-13) {
      root = ladder[i];
      break;
    }
    if (i + 1 < ladder.size() && (fi > 0.0) != (f(ladder[i + 1]) > 0.0)) {
      root = find_root_bracketed(f, ladder[i], ladder[i + 1], 1e-16);
      break;
    }
  }
  if (root < 0.0) fail(ErrorKind::NoRootInBracket, "no quantisation root for eps^2 in [0, 1e4]");
  Case2Solution s;
  s.n = n;
  s.alpha = alpha;
  s.C1 = C1;
  s.eps_sq = root;
  s.eps = std::sqrt(root);
  const Case2HypParams h = case2_hyp_params(alpha, C1, s.eps, BetaBranch::negative);
  s.beta = h.beta;
  s.gamma = h.gamma;
  s.a_h = h.a_match;
  s.b_h = h.b_match;
  s.residual = std::abs(s.a_h + static_cast<double>(n));
  return s;
}

double case2_a2_tie(double alpha, double beta, double a, double e) { return -2.0 * alpha * beta / (a * e); }

Case2Solution rosen_morse_level(int n, double a, double e, double a2) {
  const double alpha = 2.0 * a * a2 * e / (2.0 * n + 1.0);
  const double C1 = a * a * a2 * a2 * e * e - 0.5;
  return case2_quantize(n, alpha, C1);
}

MuNuFit fit_mu_nu(const std::vector<double>& eps_sq) {
  const int m = static_cast<int>(eps_sq.size());
  auto solve_nu = [&](double mu, double& nu) {
    // eps^2 - q^2/2 = -nu / (2 q^2)
    double num = 0.0, den = 0.0;
    for (int n = 0; n < m; ++n) {
      const double q = n + mu + 1.0;
      const double basis = -0.5 / (q * q);
      num += basis * (eps_sq[n] - 0.5 * q * q);
      den += basis * basis;
    }
    nu = num / den;
    double ss = 0.0;
    for (int n = 0; n < m; ++n) {
      const double q = n + mu + 1.0;
      const double r = eps_sq[n] - (0.5 * q * q - 0.5 * nu / (q * q));
      ss += r * r;
    }
    return std::sqrt(ss / m);
  };
  auto obj = [&](double mu) {
    double nu;
    return solve_nu(mu, nu);
  };
  const auto best = boost::math::tools::brent_find_minima(obj, -0.95, 20.0, 40);
  MuNuFit fit;
  fit.mu = best.first;
  fit.rms = solve_nu(fit.mu, fit.nu);
  return fit;
}

cplx case2_wavefunction(const Case2Solution& sol, double x) {
  if (std::abs(std::cos(x)) < 1e-6) fail(ErrorKind::DomainSingularity, "x too close to a pole of tan x");
  const double t = std::tan(x);
  return std::exp(-sol.alpha * x / 2.0) * std::pow(cplx(1.0 + t * t), sol.beta) *
         gauss_2f1(sol.a_h, sol.b_h, sol.gamma, (1.0 - I * t) / 2.0);
}

GridFunction case2_wavefunction_table(const Case2Solution& sol, const Grid& grid) {
  GridFunction g{grid, std::vector<cplx>(grid.n)};
  double s = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    g.values[i] = case2_wavefunction(sol, grid.x(i));
    s += std::norm(g.values[i]);
  }
  const double nrm = std::sqrt(s * grid.h());
  for (auto& v : g.values) v /= nrm;
  return g;
}

EigResult rosen_morse_fd(double a, double e, double a2, int n_grid, int count, bool vectors) {
  const double lam = a2 * e * a;
  const double c0 = a * a * a2 * a2 * e * e;
  // phi = sqrt(cos x) u:  -(cos u')' + (c0 cos + lam sin) u = eps^2 cos u
  const auto m = discretize_liouville([](double x) { return std::max(std::cos(x), 0.0); },
                                      [c0, lam](double x) { return c0 * std::cos(x) + lam * std::sin(x); },
                                      [](double x) { return std::cos(x); }, -kPi / 2.0, kPi / 2.0, n_grid);
  return eig_sym_tridiag(m, count, vectors);
}

std::vector<double> rosen_morse_fd_levels(double a, double e, double a2, int n_grid, int count) {
  return rosen_morse_fd(a, e, a2, n_grid, count, false).eigenvalues;
}

std::vector<double> rosen_morse_cutoff_levels(double a, double e, double a2, double delta, int n_grid,
                                              int count) {
  const PotentialForm v = veff_rosen_morse(a, e, a2);
  const Grid g = Grid::dirichlet(n_grid, -kPi / 2.0 + delta, kPi / 2.0 - delta);
  return eig_sym_tridiag(discretize_schrodinger(v.v, g), count, false).eigenvalues;
}

}  // namespace torus
