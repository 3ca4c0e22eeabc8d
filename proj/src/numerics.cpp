#include "torus/numerics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>
#include <string>

#include "torus/errors.hpp"

namespace torus {

TridiagonalSym discretize_schrodinger(const CplxFn& v, const Grid& grid) {
  const int n = grid.n;
  const double h = grid.h();
  TridiagonalSym m;
  m.diag.resize(n);
  m.offdiag.assign(n - 1, -1.0 / (h * h));
  for (int i = 0; i < n; ++i) {
    const cplx vi = v(grid.x(i));
    if (std::abs(vi.imag()) > 1e-12 * std::max(1.0, std::abs(vi)))
      fail(ErrorKind::ComplexPotential, "potential is complex at x = " + std::to_string(grid.x(i)));
    m.diag[i] = 2.0 / (h * h) + vi.real();
  }
  if (grid.boundary == Boundary::periodic) {
    m.periodic = true;
    m.corner = -1.0 / (h * h);
  }
  return m;
}

TridiagonalSym discretize_liouville(const RealFn& p, const RealFn& q, const RealFn& w, double lo,
                                    double hi, int n) {
  if (n < 16) fail(ErrorKind::InvalidArgument, "need n >= 16");
  const double h = (hi - lo) / n;
  std::vector<double> face(n + 1), sw(n);
  for (int i = 0; i <= n; ++i) face[i] = p(lo + i * h);
  TridiagonalSym m;
  m.diag.resize(n);
  m.offdiag.resize(n - 1);
  for (int i = 0; i < n; ++i) {
    const double x = lo + (i + 0.5) * h;
    const double wi = w(x);
    if (!(wi > 0.0)) fail(ErrorKind::InvalidArgument, "weight must be positive");
    sw[i] = std::sqrt(wi);
    // ghost value -u at the two ends: Dirichlet on the boundary face
    const double fl = i == 0 ? 2.0 * face[0] : face[i];
    const double fr = i == n - 1 ? 2.0 * face[n] : face[i + 1];
    m.diag[i] = ((fl + fr) / (h * h) + q(x)) / wi;
  }
  for (int i = 0; i + 1 < n; ++i) m.offdiag[i] = -face[i + 1] / (h * h) / (sw[i] * sw[i + 1]);
  return m;
}

int sturm_count(const TridiagonalSym& m, double x) {
  const int n = m.size();
  int count = 0;
  double d = 1.0;
  for (int i = 0; i < n; ++i) {
    const double b2 = i > 0 ? m.offdiag[i - 1] * m.offdiag[i - 1] : 0.0;
    d = (m.diag[i] - x) - (i > 0 ? b2 / d : 0.0);
    if (d == 0.0) d = -std::numeric_limits<double>::epsilon() * (std::abs(m.diag[i]) + std::abs(x) + 1.0);
    if (d < 0.0) ++count;
  }
  return count;
}

namespace {

// Solve (T - mu I) y = b with partial pivoting; T tridiagonal.
std::vector<double> solve_shifted(const TridiagonalSym& m, double mu, const std::vector<double>& b) {
  const int n = m.size();
  // Rows hold up to three upper entries after pivoting: u0 (diag), u1, u2.
  std::vector<double> u0(n), u1(n, 0.0), u2(n, 0.0), l(n, 0.0), rhs = b;
  std::vector<char> swapped(n, 0);
  double c0 = m.diag[0] - mu, c1 = n > 1 ? m.offdiag[0] : 0.0, c2 = 0.0;
  for (int i = 0; i < n - 1; ++i) {
    const double sub = m.offdiag[i];
    const double nd = m.diag[i + 1] - mu;
    const double nu = i + 1 < n - 1 ? m.offdiag[i + 1] : 0.0;
    if (std::abs(sub) > std::abs(c0)) {
      // swap row i and row i+1
      swapped[i] = 1;
      u0[i] = sub;
      u1[i] = nd;
      u2[i] = nu;
      const double f = c0 / sub;
      l[i] = f;
      std::swap(rhs[i], rhs[i + 1]);
      rhs[i + 1] -= f * rhs[i];
      c0 = c1 - f * nd;
      c1 = c2 - f * nu;
      c2 = 0.0;
    } else {
      u0[i] = c0;
      u1[i] = c1;
      u2[i] = c2;
      const double f = c0 != 0.0 ? sub / c0 : 0.0;
      l[i] = f;
      rhs[i + 1] -= f * rhs[i];
      c0 = nd - f * c1;
      c1 = nu - f * c2;
      c2 = 0.0;
    }
  }
  u0[n - 1] = c0;
  const double tiny = 1e-300;
  std::vector<double> y(n);
  for (int i = n - 1; i >= 0; --i) {
    double s = rhs[i];
    if (i + 1 < n) s -= u1[i] * y[i + 1];
    if (i + 2 < n) s -= u2[i] * y[i + 2];
    y[i] = s / (std::abs(u0[i]) > tiny ? u0[i] : tiny);
  }
  return y;
}

double residual_of(const TridiagonalSym& m, double lam, const std::vector<double>& v) {
  const int n = m.size();
  double r2 = 0.0, v2 = 0.0;
  for (int i = 0; i < n; ++i) {
    double hv = m.diag[i] * v[i];
    if (i > 0) hv += m.offdiag[i - 1] * v[i - 1];
    if (i + 1 < n) hv += m.offdiag[i] * v[i + 1];
    if (m.periodic && i == 0) hv += m.corner * v[n - 1];
    if (m.periodic && i == n - 1) hv += m.corner * v[0];
    r2 += (hv - lam * v[i]) * (hv - lam * v[i]);
    v2 += v[i] * v[i];
  }
  return std::sqrt(r2 / v2);
}

}  // namespace

EigResult eig_sym_tridiag(const TridiagonalSym& m, int k_lowest, bool vectors) {
  const int n = m.size();
  if (k_lowest > n || k_lowest < 0) fail(ErrorKind::InvalidArgument, "k_lowest out of range");
  if (m.periodic) fail(ErrorKind::InvalidArgument, "periodic matrix: use eig_dense");
  // Gershgorin bounds
  double lo = std::numeric_limits<double>::max(), hi = -lo;
  for (int i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(m.offdiag[i - 1]);
    if (i + 1 < n) r += std::abs(m.offdiag[i]);
    lo = std::min(lo, m.diag[i] - r);
    hi = std::max(hi, m.diag[i] + r);
  }
  const double scale = std::max(std::abs(lo), std::abs(hi));
  EigResult res;
  for (int j = 0; j < k_lowest; ++j) {
    double a = lo, b = hi;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      if (sturm_count(m, mid) > j) b = mid; else a = mid;
      if (b - a <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(mid))) break;
    }
    res.eigenvalues.push_back(0.5 * (a + b));
  }
  if (!vectors) return res;
  for (int j = 0; j < k_lowest; ++j) {
    const double lam = res.eigenvalues[j];
    const double shift = lam + 1e-12 * std::max(1.0, scale) * (j % 2 == 0 ? 1.0 : -1.0);
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = 1.0 + 0.01 * std::sin(0.37 * i + j);
    double rr = 1.0;
    for (int it = 0; it < 8; ++it) {
      v = solve_shifted(m, shift, v);
      // orthogonalise against earlier vectors (clustered levels)
      for (int q = 0; q < j; ++q) {
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += v[i] * res.eigenvectors[q][i];
        for (int i = 0; i < n; ++i) v[i] -= dot * res.eigenvectors[q][i];
      }
      double nv = 0.0;
      for (double x : v) nv += x * x;
      nv = std::sqrt(nv);
      for (double& x : v) x /= nv;
      rr = residual_of(m, lam, v);
      if (rr < 1e-12 * std::max(1.0, scale)) break;
    }
    res.eigenvectors.push_back(v);
    res.residuals.push_back(rr);
  }
  return res;
}

EigResult eig_dense(const TridiagonalSym& m, int k_lowest) {
  const int n = m.size();
  if (k_lowest > n || k_lowest < 0) fail(ErrorKind::InvalidArgument, "k_lowest out of range");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = m.diag[i];
  for (int i = 0; i + 1 < n; ++i) a(i, i + 1) = a(i + 1, i) = m.offdiag[i];
  if (m.periodic) a(0, n - 1) = a(n - 1, 0) = m.corner;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  if (es.info() != Eigen::Success) fail(ErrorKind::ConvergenceFailure, "dense eigensolver failed");
  EigResult res;
  for (int j = 0; j < k_lowest; ++j) {
    res.eigenvalues.push_back(es.eigenvalues()(j));
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = es.eigenvectors()(i, j);
    res.residuals.push_back(residual_of(m, res.eigenvalues.back(), v));
    res.eigenvectors.push_back(std::move(v));
  }
  return res;
}

EigResult eig_lowest(const TridiagonalSym& m, int k_lowest) {
  return m.periodic ? eig_dense(m, k_lowest) : eig_sym_tridiag(m, k_lowest);
}

namespace {

struct NumerovRun {
  int nodes = 0;
  double end_value = 0.0;
};

// Outward Numerov from t_min with psi(t_min) = 0; counts sign changes up to
// and including the last sample.
NumerovRun numerov(const std::vector<double>& v, double h, double e, std::vector<double>* keep) {
  const int m = static_cast<int>(v.size());
  const double h2 = h * h / 12.0;
  double y0 = 0.0, y1 = 1e-30;
  NumerovRun run;
  if (keep) {
    keep->assign(m, 0.0);
    (*keep)[1] = y1;
  }
  double k0 = v[0] - e, k1 = v[1] - e;
  for (int i = 1; i + 1 < m; ++i) {
    const double k2 = v[i + 1] - e;
    const double y2 = (2.0 * y1 * (1.0 + 5.0 * h2 * k1) - y0 * (1.0 - h2 * k0)) / (1.0 - h2 * k2);
    if ((y2 < 0.0) != (y1 < 0.0)) ++run.nodes;
    y0 = y1;
    y1 = y2;
    k0 = k1;
    k1 = k2;
    if (std::abs(y1) > 1e200) {
      y0 *= 1e-200;
      y1 *= 1e-200;
      if (keep)
        for (int j = 0; j <= i + 1; ++j) (*keep)[j] *= 1e-200;
    }
    if (keep) (*keep)[i + 1] = y1;
  }
  run.end_value = y1;
  return run;
}

}  // namespace

ShootingResult shoot_bound_state(const ShootingProblem& p, int n) {
  if (!(p.t_min < p.t_max)) fail(ErrorKind::InvalidArgument, "need t_min < t_max");
  const int m = p.steps + 1;
  const double h = (p.t_max - p.t_min) / p.steps;
  std::vector<double> v(m);
  double vmin = std::numeric_limits<double>::max();
  for (int i = 0; i < m; ++i) {
    v[i] = p.potential(p.t_min + i * h);
    vmin = std::min(vmin, v[i]);
  }
  // Dirichlet levels below e = zeros of the outward solution in (t_min, t_max].
  auto count_below = [&](double e) { return numerov(v, h, e, nullptr).nodes; };
  const double e_top = std::min(v.front(), v.back());
  if (count_below(e_top) < n + 1)
    fail(ErrorKind::NotConfining, "level " + std::to_string(n) + " not bound below the window edge");
  double lo = vmin, hi = e_top;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (count_below(mid) > n) hi = mid; else lo = mid;
    if (hi - lo < p.tol * std::max(1.0, std::abs(mid))) break;
  }
  ShootingResult res;
  res.energy = 0.5 * (lo + hi);
  std::vector<double> prof;
  numerov(v, h, res.energy, &prof);
  res.grid = Grid::dirichlet(std::max(16, m - 2), p.t_min, p.t_max);
  res.profile.assign(prof.begin() + 1, prof.end() - 1);
  double mx = 0.0;
  for (double y : res.profile) mx = std::max(mx, std::abs(y));
  for (double& y : res.profile) y /= mx;
  // tail near t_max is unreliable at the converged energy; count nodes where
  // |psi| is not negligible
  int nodes = 0;
  for (size_t i = 1; i < res.profile.size(); ++i)
    if ((res.profile[i] < 0.0) != (res.profile[i - 1] < 0.0) &&
        std::max(std::abs(res.profile[i]), std::abs(res.profile[i - 1])) > 1e-6)
      ++nodes;
  res.nodes = nodes;
  return res;
}

double integrate_simpson(const std::vector<double>& f, double h) {
  const size_t m = f.size();
  if (m < 3 || m % 2 == 0) fail(ErrorKind::EvenSampleCount, "Simpson needs an odd sample count >= 3");
  double s = f.front() + f.back();
  for (size_t i = 1; i + 1 < m; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * f[i];
  return s * h / 3.0;
}

cplx integrate_simpson(const std::vector<cplx>& f, double h) {
  std::vector<double> re(f.size()), im(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    re[i] = f[i].real();
    im[i] = f[i].imag();
  }
  return {integrate_simpson(re, h), integrate_simpson(im, h)};
}

double find_root_bracketed(const std::function<double(double)>& f, double lo, double hi, double tol) {
  const double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) fail(ErrorKind::NoSignChange, "f(lo) and f(hi) have the same sign");
  std::uintmax_t iters = 200;
  auto stop = [tol](double a, double b) { return std::abs(b - a) <= tol * std::max(1.0, std::abs(a)); };
  const auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, stop, iters);
  const double a = r.first, b = r.second;
  return std::abs(f(a)) <= std::abs(f(b)) ? a : b;
}

double observed_order(double err_h, double err_h2) { return std::log2(err_h / err_h2); }

}  // namespace torus
