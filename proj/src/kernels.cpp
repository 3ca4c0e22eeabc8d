#include "torus/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "torus/errors.hpp"

namespace torus::kernels {

namespace {

void check_len(const Grid& g, const Vec& f) {
  if (static_cast<int>(f.size()) != g.n) fail(ErrorKind::GridMismatch, "sample count differs from grid size");
}

// Value at index i, possibly outside [0, n).
inline cplx at(const Grid& g, const Vec& f, int i) {
  const int n = g.n;
  if (i >= 0 && i < n) return f[i];
  if (g.boundary == Boundary::periodic) return f[((i % n) + n) % n];
  if (i == -1 || i == n) return 0.0;
  if (i < -1) return -at(g, f, -2 - i);
  return -at(g, f, 2 * n - i);
}

inline cplx d1(const Grid& g, const Vec& f, int i, double h, Stencil st) {
  if (st == Stencil::second) return (at(g, f, i + 1) - at(g, f, i - 1)) / (2.0 * h);
  return (-at(g, f, i + 2) + 8.0 * at(g, f, i + 1) - 8.0 * at(g, f, i - 1) + at(g, f, i - 2)) /
         (12.0 * h);
}

inline cplx d2(const Grid& g, const Vec& f, int i, double h, Stencil st) {
  if (st == Stencil::second) return (at(g, f, i + 1) - 2.0 * f[i] + at(g, f, i - 1)) / (h * h);
  return (-at(g, f, i + 2) + 16.0 * at(g, f, i + 1) - 30.0 * f[i] + 16.0 * at(g, f, i - 1) -
          at(g, f, i - 2)) /
         (12.0 * h * h);
}

template <bool Par, class Body>
void for_points(int n, Body&& body) {
  if constexpr (Par) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) body(i);
  } else {
    for (int i = 0; i < n; ++i) body(i);
  }
}

template <bool Par>
Vec derivative_impl(const Grid& g, const Vec& f, Stencil st) {
  check_len(g, f);
  Vec out(g.n);
  const double h = g.h();
  for_points<Par>(g.n, [&](int i) { out[i] = d1(g, f, i, h, st); });
  return out;
}

template <bool Par>
Vec second_derivative_impl(const Grid& g, const Vec& f, Stencil st) {
  check_len(g, f);
  Vec out(g.n);
  const double h = g.h();
  for_points<Par>(g.n, [&](int i) { out[i] = d2(g, f, i, h, st); });
  return out;
}

template <bool Par>
Vec apply_sl_impl(const Grid& g, const Vec& sigma, const Vec& rho, const Vec& f, Stencil st) {
  check_len(g, f);
  check_len(g, sigma);
  check_len(g, rho);
  Vec out(g.n);
  const double h = g.h();
  for_points<Par>(g.n, [&](int i) {
    out[i] = -d2(g, f, i, h, st) + sigma[i] * d1(g, f, i, h, st) + rho[i] * f[i];
  });
  return out;
}

template <bool Par>
Vec apply_first_order_impl(const Grid& g, const Vec& coef, const Vec& f, Stencil st) {
  check_len(g, f);
  check_len(g, coef);
  Vec out(g.n);
  const double h = g.h();
  for_points<Par>(g.n, [&](int i) { out[i] = d1(g, f, i, h, st) + coef[i] * f[i]; });
  return out;
}

template <bool Par>
void apply_offdiag_impl(const Grid& g, double cd, const Vec& m12, const Vec& m21, const Vec& psi1,
                        const Vec& psi2, Vec& out1, Vec& out2, Stencil st) {
  check_len(g, m12);
  check_len(g, m21);
  check_len(g, psi1);
  check_len(g, psi2);
  out1.assign(g.n, 0.0);
  out2.assign(g.n, 0.0);
  const double h = g.h();
  for_points<Par>(g.n, [&](int i) {
    out1[i] = cd * d1(g, psi2, i, h, st) + m12[i] * psi2[i];
    out2[i] = cd * d1(g, psi1, i, h, st) + m21[i] * psi1[i];
  });
}

}  // namespace

namespace serial {
Vec derivative(const Grid& g, const Vec& f, Stencil st) { return derivative_impl<false>(g, f, st); }
Vec second_derivative(const Grid& g, const Vec& f, Stencil st) {
  return second_derivative_impl<false>(g, f, st);
}
Vec apply_sl(const Grid& g, const Vec& sigma, const Vec& rho, const Vec& f, Stencil st) {
  return apply_sl_impl<false>(g, sigma, rho, f, st);
}
Vec apply_first_order(const Grid& g, const Vec& coef, const Vec& f, Stencil st) {
  return apply_first_order_impl<false>(g, coef, f, st);
}
void apply_offdiag(const Grid& g, double cd, const Vec& m12, const Vec& m21, const Vec& psi1,
                   const Vec& psi2, Vec& out1, Vec& out2, Stencil st) {
  apply_offdiag_impl<false>(g, cd, m12, m21, psi1, psi2, out1, out2, st);
}
double norm_l2(const Grid& g, const Vec& f) {
  double s = 0.0;
  for (const auto& v : f) s += std::norm(v);
  return std::sqrt(s * g.h());
}
double max_abs(const Vec& f) {
  double m = 0.0;
  for (const auto& v : f) m = std::max(m, std::abs(v));
  return m;
}
}  // namespace serial

namespace omp {
Vec derivative(const Grid& g, const Vec& f, Stencil st) { return derivative_impl<true>(g, f, st); }
Vec second_derivative(const Grid& g, const Vec& f, Stencil st) {
  return second_derivative_impl<true>(g, f, st);
}
Vec apply_sl(const Grid& g, const Vec& sigma, const Vec& rho, const Vec& f, Stencil st) {
  return apply_sl_impl<true>(g, sigma, rho, f, st);
}
Vec apply_first_order(const Grid& g, const Vec& coef, const Vec& f, Stencil st) {
  return apply_first_order_impl<true>(g, coef, f, st);
}
void apply_offdiag(const Grid& g, double cd, const Vec& m12, const Vec& m21, const Vec& psi1,
                   const Vec& psi2, Vec& out1, Vec& out2, Stencil st) {
  apply_offdiag_impl<true>(g, cd, m12, m21, psi1, psi2, out1, out2, st);
}
double norm_l2(const Grid& g, const Vec& f) {
  const int n = static_cast<int>(f.size());
  double s = 0.0;
#pragma omp parallel for reduction(+ : s) schedule(static)
  for (int i = 0; i < n; ++i) s += std::norm(f[i]);
  return std::sqrt(s * g.h());
}
double max_abs(const Vec& f) {
  const int n = static_cast<int>(f.size());
  double m = 0.0;
#pragma omp parallel for reduction(max : m) schedule(static)
  for (int i = 0; i < n; ++i) m = std::max(m, std::abs(f[i]));
  return m;
}
}  // namespace omp

Vec derivative(const Grid& g, const Vec& f, Stencil st, Exec ex) {
  return ex == Exec::serial ? serial::derivative(g, f, st) : omp::derivative(g, f, st);
}
Vec second_derivative(const Grid& g, const Vec& f, Stencil st, Exec ex) {
  return ex == Exec::serial ? serial::second_derivative(g, f, st) : omp::second_derivative(g, f, st);
}
Vec apply_sl(const Grid& g, const Vec& sigma, const Vec& rho, const Vec& f, Stencil st, Exec ex) {
  return ex == Exec::serial ? serial::apply_sl(g, sigma, rho, f, st)
                            : omp::apply_sl(g, sigma, rho, f, st);
}
Vec apply_first_order(const Grid& g, const Vec& coef, const Vec& f, Stencil st, Exec ex) {
  return ex == Exec::serial ? serial::apply_first_order(g, coef, f, st)
                            : omp::apply_first_order(g, coef, f, st);
}
void apply_offdiag(const Grid& g, double cd, const Vec& m12, const Vec& m21, const Vec& psi1,
                   const Vec& psi2, Vec& out1, Vec& out2, Stencil st, Exec ex) {
  if (ex == Exec::serial)
    serial::apply_offdiag(g, cd, m12, m21, psi1, psi2, out1, out2, st);
  else
    omp::apply_offdiag(g, cd, m12, m21, psi1, psi2, out1, out2, st);
}
double norm_l2(const Grid& g, const Vec& f, Exec ex) {
  return ex == Exec::serial ? serial::norm_l2(g, f) : omp::norm_l2(g, f);
}
double max_abs(const Vec& f, Exec ex) {
  return ex == Exec::serial ? serial::max_abs(f) : omp::max_abs(f);
}

}  // namespace torus::kernels
