#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "torus/fields.hpp"
#include "torus/kernels.hpp"

namespace torus {

enum class Sector { plus, minus };

struct W12Pair {
  cplx w1 = 0.0;
  cplx w2 = 0.0;
};

struct SpinorGF {
  GridFunction psi1;
  GridFunction psi2;
};

// -psi'' + sigma psi' + rho psi = eigen_scale * eigen_weight(x) * lambda * psi
struct SLProblem {
  Grid domain;
  CplxFn sigma;
  CplxFn rho;
  double eigen_scale = 1.0;
  RealFn eigen_weight;  // empty means 1
  Sector sector = Sector::plus;
  std::string label;
};

std::vector<cplx> apply_sl(const SLProblem& p, const std::vector<cplx>& f, Stencil st,
                           Exec ex = Exec::parallel);

W12Pair dirac_offdiag(const TorusParams& p, const GaugeField& f, double x);

// H_D Psi after the exp(iku) ansatz, d/dx by central differences.
SpinorGF apply_dirac(const TorusParams& p, const GaugeField& f, int k, const Grid& grid,
                     const SpinorGF& s, Stencil st = Stencil::fourth, Exec ex = Exec::parallel);

// printed: A_u' enters rho with a e A_u' / R (feeds the counterpart chain).
// squared: a^2 e A_u' / R, which is what squaring H_D produces.
enum class RhoConvention { printed, squared };

std::pair<SLProblem, SLProblem> decouple_constant_vf(const TorusParams& p, const GaugeField& f, int k,
                                                     const Grid& grid,
                                                     RhoConvention conv = RhoConvention::printed);

// Pointwise rho^{+} for the given conventions (k, A_u as passed).
cplx rho_plus(const TorusParams& p, const GaugeField& f, int k, double x, RhoConvention conv);
cplx sigma_constant_vf(const TorusParams& p, const GaugeField& f, double x);

enum class Case2Transcription { derived, verbatim };
enum class Case2Reading { consistent, literal };

struct PdfvProblem {
  SLProblem plus;
  SLProblem minus;
  CplxFn F_plus, G_plus, F_minus, G_minus;
};

// Position-dependent Fermi velocity, normalised by V_F^2:
//   -psi'' + (sigma - V'/V) psi' + (F + G V'/V) psi = a^2 (1/V^2) lambda psi
PdfvProblem decouple_pdfv(const TorusParams& p, const GaugeField& f, int k, const FermiVelocity& vf,
                          const Grid& grid, Case2Transcription tr = Case2Transcription::derived,
                          Case2Reading rd = Case2Reading::consistent);

cplx F_plus_verbatim(const TorusParams& p, const GaugeField& f, int k, double x);
cplx G_plus_verbatim(const TorusParams& p, const GaugeField& f, int k, double x);

enum class Measure { flat, curved };

// max over random spinor pairs of |<f,Hg> - <Hf,g>| / (|f| |g|)
double self_adjointness_defect(const TorusParams& p, const GaugeField& f, int k, const Grid& grid,
                               Measure m = Measure::flat, int samples = 8, std::uint64_t seed = 7,
                               Stencil st = Stencil::fourth);

// max over random band-limited spinors of |a^2 H_D^2 psi + L psi| / |L psi|, with
// L = diag(plus, minus) from the squared convention.
double squaring_defect(const TorusParams& p, const GaugeField& f, int k, const Grid& grid, int samples = 20,
                       std::uint64_t seed = 100, int max_mode = 4, Stencil st = Stencil::fourth,
                       Exec ex = Exec::parallel);

// Random band-limited spinor with modes |m| <= max_mode.
SpinorGF random_band_limited(const Grid& grid, int max_mode, std::uint64_t seed);

// Columns x, Re sigma, Im sigma, Re rho, Im rho.
void write_sl_csv(std::ostream& os, const SLProblem& sl);

}  // namespace torus
