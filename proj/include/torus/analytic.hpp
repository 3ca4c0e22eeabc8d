#pragma once

#include <array>
#include <string>
#include <vector>

#include "torus/numerics.hpp"
#include "torus/pseudoherm.hpp"
#include "torus/special.hpp"

namespace torus {

// ---- constant Fermi velocity: Mathieu chain ----

struct MorseChain {
  double alpha = 1.0;
  MathieuParams mathieu;
  // bracket ~ c0 + c1 (z-1) + c2 (z-1)^2 near z = 1, as printed
  cplx c0 = 0.0, c1 = 0.0, c2 = 0.0;
  // the actual Taylor coefficients
  cplx c1_true = 0.0, c2_true = 0.0;
  double truncation_printed = 0.0;
  double truncation_corrected = 0.0;
};

MorseChain case1_transform_chain(const MathieuParams& m, double alpha, int samples = 4096);

// -psi'' + U(t) psi = lambda psi with U = -alpha^2 [iC y + Q (y^2 - 2y)/2],
// y = exp(-alpha t), Q = B - iC - 2D. Real for C = 0 (then a Morse well).
CplxFn transformed_potential(const MathieuParams& m, double alpha);

struct Case1Energy {
  cplx energy_sq = 0.0;
  cplx root = 0.0;  // sqrt(D - (B+C)/2)
  bool real = false;
};

Case1Energy case1_energy(int n, double alpha, const MathieuParams& m);

// Real branch on the superpotential constraint: C2 = sqrt(a-1)/(a^4 e) with
// a < 1 (imaginary C2, so B and D are real), c tied, and the C sin x term dropped.
MathieuParams case1_real_branch(double a, double e);

// Morse levels -alpha^2 (kappa - n - 1/2)^2 with kappa^2 = D - B/2 (C = 0).
struct MorseLevels {
  double alpha = 1.0;
  double kappa = 0.0;
  int bound = 0;  // levels with kappa - n - 1/2 > 0
  double level(int n) const;
};
MorseLevels morse_levels(const MathieuParams& m, double alpha);

// Readings of the displayed wavefunction z^{2mu} e^{-z/alpha} L_n^{4mu}(2 gamma s).
enum class WaveReading { s_inv_alpha, s_alpha_kappa, exp_inv_alpha, exp_alpha_kappa };
const char* to_string(WaveReading r);

struct Case1Solution {
  int n = 0;
  double alpha = 1.0;
  MathieuParams mathieu;
  cplx energy_sq = 0.0;
  cplx mu = 0.0;
  cplx laguerre_order = 0.0;
  cplx kappa = 0.0;
  WaveReading reading = WaveReading::s_inv_alpha;
  bool bounded = false;
  std::array<double, 4> reading_residuals{};
};

Case1Solution case1_solution(int n, double alpha, const MathieuParams& m);
double case1_s(const Case1Solution& sol, double t);
cplx case1_wavefunction(const Case1Solution& sol, double t);
// Tries all four readings on the window and keeps the smallest residual.
void calibrate_case1(Case1Solution& sol, double t_min, double t_max, int n_grid = 4000);

// max |-psi'' + U psi - lambda psi| / (max|psi| max(1, |lambda|)) with a
// 5-point stencil on interior samples of [lo, hi].
double schrodinger_residual(const CplxFn& psi, const CplxFn& u, cplx lambda, double lo, double hi,
                            int n_grid);

// ---- position-dependent Fermi velocity: Rosen-Morse II ----

enum class BetaBranch { positive, negative };

struct Case2HypParams {
  cplx beta = 0.0;
  cplx gamma = 0.0;
  cplx a_disp = 0.0, b_disp = 0.0;    // as printed
  cplx a_match = 0.0, b_match = 0.0;  // from matching the coefficients
  bool beta_real = true;
};

Case2HypParams case2_hyp_params(double alpha, double C1, double eps, BetaBranch br = BetaBranch::positive);

struct Case2Solution {
  int n = 0;
  double alpha = 0.0, C1 = 0.0;
  cplx beta = 0.0, gamma = 0.0, a_h = 0.0, b_h = 0.0;
  double eps = 0.0, eps_sq = 0.0;
  double residual = 0.0;  // |a_h + n|
};

// Root of a_h(eps) = -n on the negative-beta branch.
Case2Solution case2_quantize(int n, double alpha, double C1);

// a2 = -2 alpha beta / (a e)
double case2_a2_tie(double alpha, double beta, double a, double e);

// Level n of the fixed potential a^2 a2^2 e^2 - 1/2 + a2 e a tan - tan^2/4:
// alpha_n = 2 a a2 e / (2n+1), C1 = a^2 a2^2 e^2 - 1/2.
Case2Solution rosen_morse_level(int n, double a, double e, double a2);

struct MuNuFit {
  double mu = 0.0, nu = 0.0, rms = 0.0;
};
// eps_n^2 ~ (n+mu+1)^2/2 - nu / (2 (n+mu+1)^2), least squares; labelled a fit.
MuNuFit fit_mu_nu(const std::vector<double>& eps_sq);

cplx case2_wavefunction(const Case2Solution& sol, double x);
GridFunction case2_wavefunction_table(const Case2Solution& sol, const Grid& grid);

// Finite-difference spectra of the Rosen-Morse potential.
EigResult rosen_morse_fd(double a, double e, double a2, int n_grid, int count, bool vectors = true);
std::vector<double> rosen_morse_fd_levels(double a, double e, double a2, int n_grid, int count);
std::vector<double> rosen_morse_cutoff_levels(double a, double e, double a2, double delta, int n_grid,
                                              int count);

}  // namespace torus
