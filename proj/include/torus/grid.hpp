#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace torus {

using cplx = std::complex<double>;
using RealFn = std::function<double(double)>;
using CplxFn = std::function<cplx(double)>;

enum class Boundary { periodic, dirichlet };

// Uniform 1-D grid. Periodic grids cover [0, 2pi) with x_i = i*h.
// Dirichlet grids store interior points only: x_i = x_min + (i+1)*h,
// the end points carry the zero boundary value.
struct Grid {
  int n = 0;
  double x_min = 0.0;
  double x_max = 0.0;
  Boundary boundary = Boundary::periodic;

  static Grid periodic(int n);
  static Grid dirichlet(int n, double lo, double hi);

  double h() const;
  double x(int i) const;
  std::vector<double> points() const;
  void validate() const;
};

bool same_grid(const Grid& a, const Grid& b);

struct GridFunction {
  Grid grid;
  std::vector<cplx> values;
};

GridFunction sample(const Grid& grid, const CplxFn& f);
std::vector<cplx> sample_values(const Grid& grid, const CplxFn& f);

}  // namespace torus
