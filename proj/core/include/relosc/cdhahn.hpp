#pragma once

#include "relosc/log_complex.hpp"

namespace relosc {

// Continuous dual Hahn parameter triple.  The polynomials are symmetric under
// any permutation of (a, b, c).  Orthogonality on x in (0, inf) requires
// positive reals, or one positive real plus a complex-conjugate pair with
// positive real parts.
struct CdhParams {
  Complex a, b, c;
};

// S_n(x^2; a, b, c) in the conventional normalization
//   S_n = (a+b)_n (a+c)_n 3F2(-n, a+ix, a-ix; a+b, a+c; 1).
// The terminating sum depends on x only through x^2 (each factor pair is
// (a+j)^2 + x^2), so the argument is x^2 itself; complex values are fine.
Complex cdh_sum(int n, Complex x_sq, const CdhParams& p);

// The same polynomial through the three-term recurrence on
// St_k = S_k / ((a+b)_k (a+c)_k):
//   A_k St_{k+1} = (A_k + C_k - a^2 - x^2) St_k - C_k St_{k-1},
//   A_k = (k+a+b)(k+a+c),  C_k = k (k+b+c-1).
// Real parameters only; the cross-validation path against cdh_sum.
Complex cdh_recurrence(int n, Complex x_sq, const CdhParams& p);

// Orthogonality weight for real x > 0:
//   w(x) = |Gamma(a+ix) Gamma(b+ix) Gamma(c+ix) / Gamma(2ix)|^2,
// with (1/2pi) Int_0^inf w S_m S_n dx = n! Gamma(n+a+b) Gamma(n+a+c) Gamma(n+b+c) delta_mn.
double cdh_weight(double x, const CdhParams& p);

}  // namespace relosc
