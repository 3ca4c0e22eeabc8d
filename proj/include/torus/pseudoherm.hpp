#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "torus/operators.hpp"

namespace torus {

// d/dx + f(x)
struct FirstOrderOp {
  CplxFn f;
  std::string label;
  bool secular = false;  // f contains a term growing linearly in x
};

struct MultiplicativeOp {
  CplxFn m;
  std::string label;
};

using Intertwiner = std::variant<FirstOrderOp, MultiplicativeOp>;

struct PotentialForm {
  CplxFn v;
  std::string label;
};

// A + B cos x + C sin x + D sin^2 x
struct MathieuParams {
  cplx A = 0.0, B = 0.0, C = 0.0, D = 0.0;
  cplx eval(double x) const;
};

// Schrodinger operator -d^2 + V as an SLProblem on the given grid.
SLProblem schrodinger(const PotentialForm& v, const Grid& grid);

FirstOrderOp eta2_case1(const TorusParams& p, double C1);

// Counterpart potential for the quadratic A_u family, term by term.
PotentialForm hermitian_counterpart_case1(const TorusParams& p, const GaugeField& f, int k);

MathieuParams mathieu_form(const TorusParams& p, double e, cplx C2);
PotentialForm counterpart_closed_form(const TorusParams& p, double e, cplx C2);

// sqrt(a - 1) on the principal branch: i sqrt(1 - a) for a < 1.
cplx sqrt_a_minus_1(double a);

struct Superpotential {
  FirstOrderOp W;
  CplxFn dW;
  cplx C2 = 0.0;   // sqrt(a-1) / (a^4 e)
  cplx c = 0.0;    // a^2 / (2 sqrt(1-a))
  bool real_c = false;   // a < 1
  bool real_C2 = false;  // a > 1
};

// scale multiplies the sin x coefficient (1 = as printed; 1.01 = negative control).
Superpotential superpotential_case1(const TorusParams& p, double e = 1.0, double scale = 1.0);

// (V, V1): the two printed partner potentials.
std::pair<PotentialForm, PotentialForm> partner_potentials_case1(const TorusParams& p);

struct FactorizationDefect {
  double minus = 0.0;  // max |W^2 - W' - V|
  double plus = 0.0;   // max |W^2 + W' - V1|
};
FactorizationDefect factorization_defect(const TorusParams& p, int points = 10000, double scale = 1.0);

MultiplicativeOp eta1_case1(const TorusParams& p);
FirstOrderOp eta2_case2(const TorusParams& p, double C2);

// Printed prefactor exp[1/2 int_0^x (2ieA_x - a^2 sin + tan)], equal to 1 at x = 0.
GridFunction prefactor_case2(const TorusParams& p, const GaugeField& f, const Grid& grid);

// Effective potential term by term; needs the linear A_u family and cosine V_F.
PotentialForm veff_case2(const TorusParams& p, const GaugeField& f, int k, const FermiVelocity& vf);
// a^2 a2^2 e^2 - 1/2 + a2 e a tan x - tan^2 x / 4
PotentialForm veff_rosen_morse(double a, double e, double a2);

// psi = exp(1/2 int sigma) phi turns -psi'' + sigma psi' + rho psi into
// -phi'' + (rho + sigma^2/4 - sigma'/2) phi.
PotentialForm remove_first_derivative(const SLProblem& sl);
// exp(1/2 int_{x0}^x sigma)
CplxFn gauge_prefactor(const SLProblem& sl, double x0);

// max over phi of |L[P phi] - P (-phi'' + U phi)| / |P phi|
double gauge_mapping_residual(const SLProblem& sl, const CplxFn& prefactor, const PotentialForm& u,
                              const std::vector<GridFunction>& testset, Stencil st = Stencil::fourth);

// max over phi of |(eta H - H_target eta) phi| / |phi|
double intertwining_residual(const Intertwiner& eta, const SLProblem& h, const SLProblem& h_target,
                             const std::vector<GridFunction>& testset, Stencil st = Stencil::fourth,
                             Exec ex = Exec::parallel);

// Smooth bumps supported strictly inside the grid, with random phase modulation.
std::vector<GridFunction> bump_testset(const Grid& grid, int count, std::uint64_t seed);

}  // namespace torus
