#pragma once

#include <functional>
#include <vector>

#include "torus/grid.hpp"

namespace torus {

struct TridiagonalSym {
  std::vector<double> diag;
  std::vector<double> offdiag;
  // Periodic discretisations carry the wrap-around coupling here.
  double corner = 0.0;
  bool periodic = false;

  int size() const { return static_cast<int>(diag.size()); }
};

struct EigResult {
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenvectors;
  std::vector<double> residuals;  // |Hv - lambda v| / |v|
};

// -d^2/dx^2 + V with the 3-point Laplacian. Rejects complex V.
TridiagonalSym discretize_schrodinger(const CplxFn& v, const Grid& grid);

// -(p u')' + q u = lambda w u on a cell-centred grid over (lo, hi),
// x_i = lo + (i + 1/2) h, p taken at cell faces. Symmetrised with w^{-1/2}.
// Dirichlet on the end faces; where p vanishes there this is the natural condition.
TridiagonalSym discretize_liouville(const RealFn& p, const RealFn& q, const RealFn& w, double lo,
                                    double hi, int n);

// Number of eigenvalues strictly below x (Sturm sequence count).
int sturm_count(const TridiagonalSym& m, double x);

EigResult eig_sym_tridiag(const TridiagonalSym& m, int k_lowest, bool vectors = true);

// Dense symmetric path (periodic matrices), lowest k pairs.
EigResult eig_dense(const TridiagonalSym& m, int k_lowest);

// Dispatches on m.periodic.
EigResult eig_lowest(const TridiagonalSym& m, int k_lowest);

struct ShootingProblem {
  RealFn potential;
  double t_min = -10.0;
  double t_max = 10.0;
  int steps = 20000;
  double tol = 1e-12;
};

struct ShootingResult {
  double energy = 0.0;
  Grid grid;
  std::vector<double> profile;
  int nodes = 0;
};

// Level n of -psi'' + V psi = E psi with psi(t_min) = psi(t_max) = 0 by
// Numerov integration, node counting and bisection.
ShootingResult shoot_bound_state(const ShootingProblem& p, int n);

// Composite Simpson on uniform samples; needs an odd sample count.
double integrate_simpson(const std::vector<double>& f, double h);
cplx integrate_simpson(const std::vector<cplx>& f, double h);

// Root of f in [lo, hi]; requires a sign change.
double find_root_bracketed(const std::function<double(double)>& f, double lo, double hi,
                           double tol = 1e-14);

// Richardson-style observed order from errors at h and h/2.
double observed_order(double err_h, double err_h2);

}  // namespace torus
