#include "torus/special.hpp"

#include <cmath>
#include <string>

#include "torus/errors.hpp"

namespace torus {

bool is_nonpositive_integer(cplx z, int& n) {
  if (std::abs(z.imag()) > 1e-12) return false;
  const double r = std::round(z.real());
  if (r > 0.0 || std::abs(z.real() - r) > 1e-12 * std::max(1.0, std::abs(r))) return false;
  n = static_cast<int>(-r);
  return true;
}

cplx laguerre_gen(int n, cplx alpha, cplx x) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "Laguerre order must be >= 0");
  // upward three-term recurrence; the explicit sum cancels badly for x of a few units
  // carried in long double to keep ~1e-15 relative accuracy up to order 20
  using lc = std::complex<long double>;
  if (n == 0) return 1.0;
  const lc al(alpha.real(), alpha.imag()), xl(x.real(), x.imag());
  lc l0 = 1.0L, l1 = 1.0L + al - xl;
  for (int m = 1; m < n; ++m) {
    const long double md = m;
    const lc l2 = ((2.0L * md + 1.0L + al - xl) * l1 - (md + al) * l0) / (md + 1.0L);
    l0 = l1;
    l1 = l2;
  }
  return {static_cast<double>(l1.real()), static_cast<double>(l1.imag())};
}

namespace {

cplx terminating(cplx a, cplx b, cplx c, cplx s, int n) {
  int mc = 0;
  if (is_nonpositive_integer(c, mc) && mc < n)
    fail(ErrorKind::PoleAtC, "c is a nonpositive integer above the termination order");
  // polynomial terms can cancel; long double keeps the sum near full double accuracy
  using lc = std::complex<long double>;
  const lc al(a.real(), a.imag()), bl(b.real(), b.imag()), cl(c.real(), c.imag()), sl(s.real(), s.imag());
  lc term = 1.0L, sum = 1.0L;
  for (int m = 0; m < n; ++m) {
    const long double md = m;
    term *= (al + md) * (bl + md) / ((cl + md) * (md + 1.0L)) * sl;
    sum += term;
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

cplx series(cplx a, cplx b, cplx c, cplx s, int max_terms) {
  cplx term = 1.0, sum = 1.0;
  int quiet = 0;
  for (int m = 0; m < max_terms; ++m) {
    const double md = m;
    term *= (a + md) * (b + md) / ((c + md) * (md + 1.0)) * s;
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) {
      if (++quiet >= 2) return sum;
    } else {
      quiet = 0;
    }
  }
  fail(ErrorKind::ConvergenceFailure, "2F1 series did not converge in " + std::to_string(max_terms) + " terms");
}

}  // namespace

cplx gauss_2f1(cplx a, cplx b, cplx c, cplx s) {
  int na = 0, nb = 0;
  const bool ta = is_nonpositive_integer(a, na);
  const bool tb = is_nonpositive_integer(b, nb);
  if (ta || tb) {
    const int n = (ta && tb) ? std::min(na, nb) : (ta ? na : nb);
    return terminating(a, b, c, s, n);
  }
  int mc = 0;
  if (is_nonpositive_integer(c, mc)) fail(ErrorKind::PoleAtC, "c is a nonpositive integer");
  const double r = std::abs(s);
  if (r >= 1.0) fail(ErrorKind::DomainUnsupported, "non-terminating 2F1 needs |s| < 1");
  int nca = 0, ncb = 0;
  if (is_nonpositive_integer(c - a, nca) || is_nonpositive_integer(c - b, ncb)) {
    // Euler: (1-s)^{c-a-b} 2F1(c-a, c-b; c; s), terminating
    return std::pow(1.0 - s, c - a - b) * gauss_2f1(c - a, c - b, c, s);
  }
  if (r < 0.8) return series(a, b, c, s, 4000);
  const cplx w = s / (s - 1.0);
  if (std::abs(w) < 0.8) return std::pow(1.0 - s, -a) * series(a, c - b, c, w, 4000);
  return series(a, b, c, s, 400000);
}

}  // namespace torus
