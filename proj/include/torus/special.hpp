#pragma once

#include <complex>

namespace torus {

using cplx = std::complex<double>;

// Generalised Laguerre polynomial L_n^(alpha)(x) by the three-term recurrence.
cplx laguerre_gen(int n, cplx alpha, cplx x);

// Gauss 2F1(a, b; c; s).
// Terminating when a or b is a nonpositive integer (any s); otherwise a power
// series for |s| < 0.8 and a Pfaff transformation or extended series for
// 0.8 <= |s| < 1.
cplx gauss_2f1(cplx a, cplx b, cplx c, cplx s);

// Nonpositive integer test with tolerance; sets n = -z.
bool is_nonpositive_integer(cplx z, int& n);

}  // namespace torus
