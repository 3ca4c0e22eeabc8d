#pragma once

#include <vector>

#include "torus/grid.hpp"

namespace torus {

enum class Stencil { second, fourth };
enum class Exec { serial, parallel };

// Stencil kernels on uniform grids. Periodic grids wrap around; Dirichlet
// grids see a zero boundary value and an odd reflection one step further.
// Every kernel exists twice: kernels::serial is the reference, kernels::omp
// the OpenMP version. Results agree to rounding.
namespace kernels {

using Vec = std::vector<cplx>;

namespace serial {
Vec derivative(const Grid& g, const Vec& f, Stencil st);
Vec second_derivative(const Grid& g, const Vec& f, Stencil st);
// -f'' + sigma f' + rho f
Vec apply_sl(const Grid& g, const Vec& sigma, const Vec& rho, const Vec& f, Stencil st);
// f' + coef f
Vec apply_first_order(const Grid& g, const Vec& coef, const Vec& f, Stencil st);
// out1 = cd*psi2' + m12*psi2, out2 = cd*psi1' + m21*psi1
void apply_offdiag(const Grid& g, double cd, const Vec& m12, const Vec& m21, const Vec& psi1,
                   const Vec& psi2, Vec& out1, Vec& out2, Stencil st);
double norm_l2(const Grid& g, const Vec& f);
double max_abs(const Vec& f);
}  // namespace serial

namespace omp {
Vec derivative(const Grid& g, const Vec& f, Stencil st);
Vec second_derivative(const Grid& g, const Vec& f, Stencil st);
Vec apply_sl(const Grid& g, const Vec& sigma, const Vec& rho, const Vec& f, Stencil st);
Vec apply_first_order(const Grid& g, const Vec& coef, const Vec& f, Stencil st);
void apply_offdiag(const Grid& g, double cd, const Vec& m12, const Vec& m21, const Vec& psi1,
                   const Vec& psi2, Vec& out1, Vec& out2, Stencil st);
double norm_l2(const Grid& g, const Vec& f);
double max_abs(const Vec& f);
}  // namespace omp

Vec derivative(const Grid& g, const Vec& f, Stencil st, Exec ex = Exec::parallel);
Vec second_derivative(const Grid& g, const Vec& f, Stencil st, Exec ex = Exec::parallel);
Vec apply_sl(const Grid& g, const Vec& sigma, const Vec& rho, const Vec& f, Stencil st,
             Exec ex = Exec::parallel);
Vec apply_first_order(const Grid& g, const Vec& coef, const Vec& f, Stencil st,
                      Exec ex = Exec::parallel);
void apply_offdiag(const Grid& g, double cd, const Vec& m12, const Vec& m21, const Vec& psi1,
                   const Vec& psi2, Vec& out1, Vec& out2, Stencil st, Exec ex = Exec::parallel);
double norm_l2(const Grid& g, const Vec& f, Exec ex = Exec::parallel);
double max_abs(const Vec& f, Exec ex = Exec::parallel);

}  // namespace kernels
}  // namespace torus
