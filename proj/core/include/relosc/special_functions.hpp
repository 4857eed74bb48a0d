#pragma once

#include "relosc/log_complex.hpp"

namespace relosc {

// log Gamma(z) with the phase reduced to (-pi, pi].  Lanczos sum on
// Re z >= 1/2, reflection Gamma(z)Gamma(1-z) = pi/sin(pi z) otherwise,
// conjugation for Im z < 0.  PoleError within 1e-300 of a non-positive
// integer; std::domain_error on non-finite input.
LogComplex log_gamma(Complex z);

// Generalized degree of the relativistic configurational coordinate,
//   rho^(delta) = i^delta Gamma(delta - i rho) / Gamma(-i rho),
// with i^delta = e^{i pi delta / 2} (principal branch).  Satisfies
// rho^(delta+1) = i (delta - i rho) rho^(delta) and rho^(2) = rho(rho + i).
// rho = 0 is the limit value: 1 for delta = 0, exact zero for Re(delta) > 0,
// PoleError otherwise.
LogComplex generalized_degree(Complex rho, Complex delta);

// Left-factor analogue used by the bound-state ansatz:
//   (-rho)^(alpha) = i^alpha Gamma(alpha + i rho) / Gamma(i rho).
// Equals generalized_degree(-rho, alpha).
LogComplex neg_rho_degree(Complex rho, Complex alpha);

// M_nu(rho) = omega0^{i rho} Gamma(nu + i rho), omega0 > 0.
// |M_nu(rho)| = |Gamma(nu + i rho)| for real rho.
LogComplex m_factor(Complex rho, Complex nu, double omega0);

// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
Complex pochhammer(Complex a, int n);

}  // namespace relosc
