#include <cmath>
#include <numbers>

#include "doctest.h"
#include "torus/errors.hpp"
#include "torus/fields.hpp"

using namespace torus;
using doctest::Approx;

TEST_CASE("gauge families") {
  const TorusParams p{0.5, 2.0};
  const auto h = eval_gauge(GaugeField::hermitizing_ax(1.0), p, 0.0);
  CHECK(std::abs(h.ax) == 0.0);
  const auto h2 = eval_gauge(GaugeField::hermitizing_ax(1.0), p, 1.0);
  CHECK(h2.ax.real() == 0.0);
  CHECK(h2.ax.imag() == Approx(-0.25 * std::sin(1.0) / 2.0));

  const auto q = eval_gauge(GaugeField::quadratic_au_tied(1.0, 1.0, 1, 0.5), p, std::numbers::pi / 2);
  CHECK(q.au.real() == Approx(2.0));
  const auto l = eval_gauge(GaugeField::linear_au(1.0, 0.1, 2), p, 0.0);
  CHECK(l.au.real() == Approx(-3.75));
}

TEST_CASE("charge zero is rejected") {
  for (auto make : {+[] { return GaugeField::hermitizing_ax(0.0); }, +[] { return GaugeField::linear_au(0.0, 0.1, 1); },
                    +[] { return GaugeField::quadratic_au(0.0, 1.0, 0.0); }}) {
    try {
      make();
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ChargeZero);
    }
  }
}

TEST_CASE("quadratic family with tied C3 cancels k") {
  const TorusParams p{0.5, 2.0};
  const double e = 1.3;
  const int k = 3;
  const cplx C2(0.2, 0.1);
  const auto f = GaugeField::quadratic_au_tied(e, C2, k, p.a);
  for (double x : {0.0, 0.4, 2.2, 5.0}) {
    const cplx lhs = static_cast<double>(k) + p.a * e * eval_gauge(f, p, x).au;
    const double r = radius_profile(p, x);
    CHECK(std::abs(lhs - p.a * e * C2 * r * r) < 1e-13);
  }
  CHECK(GaugeField::quadratic_au(1.0, cplx(0.0, 0.3), 0.0).c2_convention != "real");
}

TEST_CASE("families are 2pi-periodic") {
  const TorusParams p{0.5, 2.0};
  for (const auto& f : {GaugeField::hermitizing_ax(1.0), GaugeField::linear_au(1.0, 0.2, 1),
                        GaugeField::quadratic_au(1.0, 0.5, -2.0), GaugeField::cosine_ax(1.0, 0.7)}) {
    for (double x : {0.3, 1.9}) {
      const auto a = eval_gauge(f, p, x), b = eval_gauge(f, p, x + 2 * std::numbers::pi);
      CHECK(std::abs(a.ax - b.ax) < 1e-13);
      CHECK(std::abs(a.au - b.au) < 1e-13);
    }
  }
}

TEST_CASE("negated A_u is exact") {
  const TorusParams p{0.5, 2.0};
  for (const auto& f : {GaugeField::linear_au(1.0, 0.2, 1), GaugeField::quadratic_au(1.0, 0.5, -2.0)}) {
    const auto n = f.negated_au();
    for (double x : {0.3, 1.9}) {
      CHECK(eval_gauge(n, p, x).au == -eval_gauge(f, p, x).au);
      CHECK(eval_gauge(n, p, x).dau == -eval_gauge(f, p, x).dau);
    }
  }
}

TEST_CASE("tabulated field interpolates smooth samples") {
  const TorusParams p{0.5, 2.0};
  const int n = 256;
  std::vector<cplx> ax(n), au(n);
  for (int i = 0; i < n; ++i) {
    const double x = 2 * std::numbers::pi * i / n;
    ax[i] = cplx(std::cos(x), 0.5 * std::sin(x));
    au[i] = std::sin(2 * x);
  }
  const auto f = GaugeField::tabulated(1.0, ax, au);
  for (double x : {0.11, 3.3, 6.2, -0.4}) {
    const auto g = eval_gauge(f, p, x);
    CHECK(std::abs(g.ax - cplx(std::cos(x), 0.5 * std::sin(x))) < 1e-6);
    CHECK(std::abs(g.au - std::sin(2 * x)) < 1e-6);
    CHECK(std::abs(g.dau - 2 * std::cos(2 * x)) < 1e-3);
  }
  const auto nf = f.negated_au();
  CHECK(std::abs(eval_gauge(nf, p, 1.0).au + std::sin(2.0)) < 1e-5);
}

TEST_CASE("fermi velocity profiles") {
  const TorusParams p{0.5, 2.0};
  const auto c = eval_fermi_velocity(FermiVelocity::constant(1.0), p, 0.7);
  CHECK(c.v == 1.0);
  CHECK(c.dv == 0.0);
  const auto k0 = eval_fermi_velocity(FermiVelocity::cosine(0.5), p, 0.0);
  CHECK(k0.v == 0.5);
  CHECK(k0.dv == 0.0);
  const auto k1 = eval_fermi_velocity(FermiVelocity::cosine(0.5), p, std::numbers::pi / 2);
  CHECK(std::abs(k1.v) < 1e-16);
  CHECK(k1.dv == Approx(-0.5));
  CHECK_THROWS_AS(FermiVelocity::constant(0.0), Error);
}
