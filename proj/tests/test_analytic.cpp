#include <cmath>
#include <numbers>

#include "doctest.h"
#include "torus/analytic.hpp"
#include "torus/errors.hpp"

using namespace torus;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
const cplx I(0.0, 1.0);
}  // namespace

TEST_CASE("transform chain") {
  const auto z = case1_transform_chain({}, 1.0);
  CHECK(z.truncation_printed == 0.0);
  const MathieuParams m{0.3, 0.1, 0.4, -0.05};
  const auto ch = case1_transform_chain(m, 1.0);
  CHECK(std::abs(ch.c2 - 0.5 * (m.B - I * m.C - 2.0 * m.D)) < 1e-15);
  CHECK(std::abs(ch.c0 - (m.A + m.B)) < 1e-15);
  // the sign of the C term flips between the printed and the Taylor coefficients
  CHECK(std::abs(ch.c1 + ch.c1_true) < 1e-15);
  const MathieuParams m0{0.3, 0.1, 0.0, -0.05};
  const auto ch0 = case1_transform_chain(m0, 1.0);
  CHECK(ch0.truncation_printed == Approx(ch0.truncation_corrected));
  // a larger parameter vector truncates worse
  const auto big = case1_transform_chain({0.6, 0.2, 0.8, -0.1}, 1.0);
  CHECK(big.truncation_corrected > ch.truncation_corrected);
}

TEST_CASE("energy formula") {
  const auto e = case1_energy(0, 1.0, {0.0, 0.0, 0.0, -1.0});
  CHECK(std::abs(e.energy_sq - cplx(0.75, 1.0)) < 1e-14);
  CHECK_FALSE(e.real);
  const auto r = case1_energy(1, 1.0, {0.0, -1.0, 0.0, 2.0});
  CHECK(r.real);
  try {
    case1_energy(0, 1.0, {0.0, 1.0, 1.0, 1.0});
    FAIL("expected throw");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::SingularParameter);
  }
}

TEST_CASE("Morse levels against shooting") {
  for (double a : {0.5, 0.25}) {
    // C = 0: B and D real; kappa^2 = D - B/2
    const MathieuParams m{0.0, -a, 0.0, 6.0 + a};
    const auto ml = morse_levels(m, 1.0);
    const CplxFn u = transformed_potential(m, 1.0);
    ShootingProblem sp{[u](double t) { return u(t).real(); }, -4.0, 40.0, 40000, 1e-13};
    for (int n = 0; n < ml.bound && ml.kappa - n - 0.5 > 0.3; ++n) {
      const double want = ml.level(n);
      const double got = shoot_bound_state(sp, n).energy;
      CHECK(std::abs(got - want) / std::abs(want) < 1e-4);
    }
    // the closed form agrees with the Morse levels at alpha = 1
    for (int n = 0; n < ml.bound; ++n) {
      const auto en = case1_energy(n, 1.0, m);
      CHECK(std::abs(en.energy_sq - ml.level(n)) < 1e-12);
    }
  }
  CHECK_THROWS_AS(morse_levels({0.0, 0.1, 0.2, 1.0}, 1.0), Error);
  CHECK_THROWS_AS(morse_levels({0.0, 2.0, 0.0, 0.5}, 1.0), Error);
}

TEST_CASE("wavefunction reading") {
  const MathieuParams m{0.0, -0.5, 0.0, 6.0};
  for (int n : {0, 1}) {
    auto sol = case1_solution(n, 1.0, m);
    CHECK(sol.bounded);
    calibrate_case1(sol, -1.0, 8.0);
    CHECK(sol.reading == WaveReading::s_inv_alpha);
    CHECK(sol.reading_residuals[0] < 1e-6);
    // gamma only enters through the Laguerre argument, so n = 0 cannot tell 0 from 1
    for (int j = n == 0 ? 2 : 1; j < 4; ++j) CHECK(sol.reading_residuals[j] > 1e-3);
  }
}

TEST_CASE("schrodinger residual oracle") {
  // psi = exp(-t^2/2) for V = t^2, lambda = 1
  const double r = schrodinger_residual([](double t) { return cplx(std::exp(-t * t / 2)); },
                                        [](double t) { return cplx(t * t); }, 1.0, -6.0, 6.0, 2001);
  CHECK(r < 1e-8);
  const double bad = schrodinger_residual([](double t) { return cplx(std::exp(-t * t / 2)); },
                                          [](double t) { return cplx(t * t); }, 1.1, -6.0, 6.0, 2001);
  CHECK(bad > 1e-2);
}

TEST_CASE("hypergeometric parameters") {
  const auto h = case2_hyp_params(0.0, -0.25, 0.0);
  CHECK(std::abs(h.beta) < 1e-15);
  CHECK(std::abs(h.gamma - 1.0) < 1e-15);
  CHECK(std::abs(h.a_match - 0.5) < 1e-15);
  const auto p = case2_hyp_params(0.4, 0.1, 1.3);
  CHECK(std::abs(p.a_match + p.b_match - (1.0 + 4.0 * p.beta)) < 1e-14);
  const auto n = case2_hyp_params(0.4, 0.1, 1.3, BetaBranch::negative);
  CHECK(std::abs(n.beta + p.beta) < 1e-15);
  CHECK_FALSE(case2_hyp_params(0.0, 2.0, 0.1).beta_real);
}

TEST_CASE("quantisation") {
  const auto s0 = case2_quantize(0, 0.0, -0.25);
  CHECK(s0.residual < 1e-12);
  // independent bisection on 1/2 - sqrt(arg)/2 + n = 0 with arg = alpha^2 - 1 - 4 C1 + 4 eps^2
  for (int n : {0, 1, 2}) {
    const double alpha = 0.3, C1 = 0.1;
    const auto s = case2_quantize(n, alpha, C1);
    const double want = (std::pow(2.0 * n + 1.0, 2) + 1.0 + 4.0 * C1 - alpha * alpha) / 4.0;
    CHECK(s.eps_sq == Approx(want).epsilon(1e-12));
    CHECK(s.residual < 1e-12);
    CHECK(s.beta.real() < 0.0);
  }
  double prev = -1.0;
  for (int n = 0; n < 6; ++n) {
    const double e2 = case2_quantize(n, 1.0, 0.0).eps_sq;
    CHECK(e2 > prev);
    prev = e2;
  }
  CHECK_THROWS_AS(case2_quantize(0, 0.0, 1e5), Error);
  CHECK(case2_a2_tie(0.4, -0.5, 0.5, 1.0) == Approx(0.8));
}

TEST_CASE("Rosen-Morse levels") {
  const double a = 0.5, e = 1.0, a2 = 0.2;
  const double want[4] = {0.0, 2.00889, 6.0096, 12.0098};
  for (int n = 0; n < 4; ++n) {
    const auto s = rosen_morse_level(n, a, e, a2);
    const double closed = (std::pow(2 * n + 1.0, 2) - 1.0) / 4.0 +
                          a * a * a2 * a2 * e * e * (1.0 - 1.0 / std::pow(2 * n + 1.0, 2));
    CHECK(s.eps_sq == Approx(closed).epsilon(1e-12));
    CHECK(std::abs(s.eps_sq - want[n]) < 1e-4);
  }
  const auto fd = rosen_morse_fd_levels(a, e, a2, 4000, 4);
  for (int n = 0; n < 4; ++n) {
    const double an = rosen_morse_level(n, a, e, a2).eps_sq;
    CHECK(std::abs(fd[n] - an) / std::max(1.0, std::abs(an)) < 1e-3);
  }
}

TEST_CASE("Rosen-Morse wavefunctions") {
  const double a = 0.5, e = 1.0, a2 = 0.2;
  const auto v = veff_rosen_morse(a, e, a2);
  for (int n = 0; n < 3; ++n) {
    const auto s = rosen_morse_level(n, a, e, a2);
    const double r = schrodinger_residual([&](double x) { return case2_wavefunction(s, x); }, v.v, s.eps_sq,
                                          -kPi / 2 + 0.2, kPi / 2 - 0.2, 2001);
    CHECK(r < 1e-6);
  }
  const auto s0 = rosen_morse_level(0, a, e, a2);
  const Grid g = Grid::dirichlet(999, -kPi / 2 + 1e-3, kPi / 2 - 1e-3);
  const auto tab = case2_wavefunction_table(s0, g);
  double nrm = 0.0;
  for (auto z : tab.values) nrm += std::norm(z);
  CHECK(nrm * g.h() == Approx(1.0));
  // ground state: no sign change in the modulus-weighted real part, vanishing at the ends
  CHECK(std::abs(tab.values.front()) < 0.1 * std::abs(tab.values[g.n / 2]));
}

TEST_CASE("mu nu fit") {
  std::vector<double> e2;
  for (int n = 0; n < 6; ++n) {
    const double q = n + 0.3 + 1.0;
    e2.push_back(0.5 * q * q - 0.5 * 0.7 / (q * q));
  }
  const auto f = fit_mu_nu(e2);
  CHECK(f.mu == Approx(0.3).epsilon(1e-5));
  CHECK(f.nu == Approx(0.7).epsilon(1e-4));
  CHECK(f.rms < 1e-8);
}

TEST_CASE("real branch on the constraint") {
  const auto m = case1_real_branch(0.5, 1.0);
  CHECK(std::abs(m.C) == 0.0);
  CHECK(m.B.imag() == 0.0);
  CHECK(m.D.real() == Approx(2.0));
  CHECK(m.B.real() == Approx(-std::sqrt(2.0)));
  CHECK(morse_levels(m, 1.0).kappa == Approx(1.645).epsilon(1e-3));
  CHECK(morse_levels(m, 1.0).bound == 2);
  CHECK(morse_levels(case1_real_branch(0.25, 1.0), 1.0).kappa == Approx(3.71).epsilon(1e-3));
  CHECK_THROWS_AS(case1_real_branch(1.5, 1.0), Error);
}
