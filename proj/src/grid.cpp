#include "torus/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "torus/errors.hpp"

namespace torus {

Grid Grid::periodic(int n) {
  Grid g{n, 0.0, 2.0 * std::numbers::pi, Boundary::periodic};
  g.validate();
  return g;
}

Grid Grid::dirichlet(int n, double lo, double hi) {
  Grid g{n, lo, hi, Boundary::dirichlet};
  g.validate();
  return g;
}

double Grid::h() const {
  if (boundary == Boundary::periodic) return (x_max - x_min) / n;
  return (x_max - x_min) / (n + 1);
}

double Grid::x(int i) const {
  if (boundary == Boundary::periodic) return x_min + i * h();
  return x_min + (i + 1) * h();
}

std::vector<double> Grid::points() const {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = x(i);
  return xs;
}

void Grid::validate() const {
  if (n < 16) fail(ErrorKind::InvalidArgument, "grid needs n >= 16, got " + std::to_string(n));
  if (!(x_min < x_max)) fail(ErrorKind::InvalidArgument, "grid needs x_min < x_max");
  if (boundary == Boundary::periodic) {
    if (std::abs(x_min) > 1e-14 || std::abs(x_max - 2.0 * std::numbers::pi) > 1e-12)
      fail(ErrorKind::InvalidArgument, "periodic grid must span [0, 2pi)");
  }
}

bool same_grid(const Grid& a, const Grid& b) {
  return a.n == b.n && a.boundary == b.boundary && a.x_min == b.x_min && a.x_max == b.x_max;
}

std::vector<cplx> sample_values(const Grid& grid, const CplxFn& f) {
  std::vector<cplx> v(grid.n);
  for (int i = 0; i < grid.n; ++i) v[i] = f(grid.x(i));
  return v;
}

GridFunction sample(const Grid& grid, const CplxFn& f) { return {grid, sample_values(grid, f)}; }

}  // namespace torus
