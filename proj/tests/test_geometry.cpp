#include <cmath>
#include <numbers>

#include "doctest.h"
#include "torus/errors.hpp"
#include "torus/geometry.hpp"

using namespace torus;
using doctest::Approx;

namespace {
// Levi-Civita symbols from central differences of metric_at; only x-derivatives
// are nonzero. Returns (Gamma^u_{xu}, Gamma^x_{uu}).
ChristoffelSet fd_christoffel(const TorusParams& p, double x, double h) {
  const Mat3 gp = metric_at(p, x + h), gm = metric_at(p, x - h), g = metric_at(p, x);
  const double dguu = (gp[2][2] - gm[2][2]) / (2 * h);
  ChristoffelSet s;
  s.gamma_2_12 = 0.5 / g[2][2] * dguu;
  s.gamma_1_22 = -0.5 / g[1][1] * dguu;
  return s;
}
}  // namespace

TEST_CASE("radius profile") {
  const TorusParams p{0.5, 2.0};
  CHECK(radius_profile(p, 0.0) == 2.5);
  CHECK(radius_profile(p, std::numbers::pi / 2) == Approx(2.0));
  CHECK(radius_profile(p, std::numbers::pi) == 1.5);
}

TEST_CASE("metric and vierbein") {
  const TorusParams p{0.5, 2.0};
  const Mat3 g = metric_at(p, 0.0);
  CHECK(g[0][0] == 1.0);
  CHECK(g[1][1] == -0.25);
  CHECK(g[2][2] == -6.25);
  const Mat3 small = metric_at({1e-3, 2.0}, 1.3);
  CHECK(small[2][2] == Approx(-4.0).epsilon(0.01));
  const Mat3 e = vierbein_at(p, std::numbers::pi / 2);
  CHECK(e[1][1] == 0.5);
  CHECK(e[2][2] == Approx(2.0));
  const Mat3 e2 = vierbein_at({0.7, 3.0}, 1.1);
  CHECK(e2[1][1] > 0.0);
  CHECK(e2[2][2] > 0.0);
}

TEST_CASE("frame identity holds to rounding") {
  const TorusParams p{0.7, 3.0};
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double x = 2 * std::numbers::pi * i / 200;
    const Mat3 g = metric_at(p, x), r = metric_from_frame(vierbein_at(p, x));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) worst = std::max(worst, std::abs(g[a][b] - r[a][b]));
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("christoffel closed forms") {
  const TorusParams p{0.5, 2.0};
  const auto c0 = christoffel_at(p, 0.0);
  CHECK(c0.gamma_2_12 == 0.0);
  CHECK(c0.gamma_1_22 == 0.0);
  const auto c1 = christoffel_at(p, std::numbers::pi / 2);
  CHECK(c1.gamma_2_12 == Approx(-0.25));
  CHECK(c1.gamma_1_22 == Approx(4.0));
  CHECK_THROWS_AS(christoffel_at({1.0, 1.0 + 1e-14}, std::numbers::pi), Error);
}

TEST_CASE("christoffel agrees with finite-difference oracle at second order") {
  const TorusParams p{0.5, 2.0};
  const double x = 0.3;
  const auto exact = christoffel_at(p, x);
  double e[2];
  int j = 0;
  for (double h : {1e-2, 5e-3}) {
    const auto fd = fd_christoffel(p, x, h);
    e[j++] = std::max(std::abs(fd.gamma_2_12 - exact.gamma_2_12), std::abs(fd.gamma_1_22 - exact.gamma_1_22));
  }
  CHECK(e[1] < 1e-5);
  CHECK(std::log2(e[0] / e[1]) >= 1.9);
}

TEST_CASE("periodicity and parity") {
  const TorusParams p{0.5, 2.0};
  for (double x : {0.1, 1.7, 4.0}) {
    const auto a = christoffel_at(p, x), b = christoffel_at(p, x + 2 * std::numbers::pi);
    CHECK(std::abs(a.gamma_2_12 - b.gamma_2_12) < 1e-13);
    CHECK(std::abs(a.gamma_1_22 - b.gamma_1_22) < 1e-13);
    CHECK(christoffel_at(p, -x).gamma_2_12 == Approx(-a.gamma_2_12));
    CHECK(metric_at(p, -x)[2][2] == Approx(metric_at(p, x)[2][2]));
  }
}

TEST_CASE("spin connection, printed form") {
  CHECK(spin_connection_printed({0.5, 2.0}, 0.0) == 0.0);
  CHECK(spin_connection_printed({0.5, 2.0}, std::numbers::pi / 2) == Approx(0.5));
  CHECK(std::abs(spin_connection_printed({0.3, 1.5}, std::numbers::pi)) < 1e-15);
}

TEST_CASE("spin connection from the frame contraction") {
  const TorusParams p{0.5, 2.0};
  CHECK(spin_connection_derived(p, 0.0) == 0.0);
  CHECK(std::abs(spin_connection_derived(p, std::numbers::pi)) < 1e-15);
  // Oracle: the same contraction with Christoffels from differenced metrics,
  // Richardson-extrapolated in h.
  const double x = 0.7;
  auto at = [&](double h) { return spin_connection_contract(p, x, fd_christoffel(p, x, h)); };
  const double rich = (4.0 * at(1e-3) - at(2e-3)) / 3.0;
  CHECK(spin_connection_derived(p, x) == Approx(rich).epsilon(1e-10));
  // The contraction gives -sin(x)/2, not the printed (a/2) R sin x.
  CHECK(spin_connection_derived(p, x) == Approx(-0.5 * std::sin(x)));
  const auto rep = compare_spin_connection(p, x);
  CHECK(rep.difference == Approx(rep.printed - rep.derived));
  CHECK(std::abs(rep.difference) > 0.1);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS((TorusParams{0.5, 0.5}.validate()), Error);
  CHECK_THROWS_AS((TorusParams{-1.0, 2.0}.validate()), Error);
  CHECK(TorusParams{0.5, 2.0}.validate().empty());
  CHECK(TorusParams{0.5, 0.2}.validate().size() == 1);
}

TEST_CASE("bundled geometry checks") {
  const auto c = geometry_checks({0.5, 2.0});
  CHECK(c.frame_defect < 1e-13);
  CHECK(c.christoffel_order > 1.9);
  CHECK(c.spin_max_diff > 0.1);
  const auto fd = christoffel_fd({0.5, 2.0}, 0.7, 1e-4);
  const auto ex = christoffel_at({0.5, 2.0}, 0.7);
  CHECK(fd.gamma_2_12 == Approx(ex.gamma_2_12).epsilon(1e-7));
  CHECK_THROWS_AS(geometry_checks({0.5, 0.5}), Error);
}
