#pragma once

#include <vector>

#include "relosc/log_complex.hpp"
#include "relosc/oscillator.hpp"

namespace relosc {

// Ordinary (non-relativistic) singular oscillator in natural units of the
// oscillator: xi = r sqrt(m omega / hbar).
struct NonRelParams {
  double m = 1.0;
  double omega = 1.0;
  double g = 0.0;
  double hbar = 1.0;

  // s from 2s+1 = (1/2)(1 + sqrt((2l+1)^2 + 8 m g / hbar^2)); this is the
  // c -> inf limit of alpha_l.  BranchError when the radicand is negative.
  double limit_exponent_s(int l) const;
};

// E_nl = hbar omega (2n + 2s + 3/2).  BranchError when s is complex; use
// nonrel_energy_complex where the continuation is wanted (boundary scans).
double nonrel_energy(const NonRelParams& p, QuantumNumbers q);
Complex nonrel_energy_complex(const NonRelParams& p, QuantumNumbers q);

// g below which the non-relativistic spectrum turns complex: -(2l+1)^2/8
// in units with m = hbar = 1 (scaled by hbar^2/m otherwise).
double nonrel_collapse_threshold_g(const NonRelParams& p, int l);

// Generalized Laguerre L_n^a(x) by the ascending three-term recurrence.
double laguerre(int n, double a, double x);

// R_nl(xi) = sqrt(2 n! / Gamma(n + 2s + 3/2)) xi^(2s+1) e^(-xi^2/2) L_n^(2s+1/2)(xi^2),
// normalized so Int_0^inf R^2 d xi = 1.
double nonrel_radial_wavefunction(const NonRelParams& p, QuantumNumbers q, double xi);

struct SweepPoint {
  double mu = 0.0;     // (c / (omega r0))^2 with r0 = sqrt(hbar/(m omega))
  double value = 0.0;  // gap or sup deviation at this mu
};

// |E_rel - mc^2 - E_nonrel| against mu; the gap closes like 1/mu.
std::vector<SweepPoint> energy_limit_sweep(const NonRelParams& p, QuantumNumbers q,
                                           const std::vector<double>& mu_values);

// sup_xi | mu^(1/4) |R_rel(sqrt(mu) xi)| - |R_nonrel(xi)| | over a fixed xi
// grid.  Moduli are compared: the relativistic function carries a constant
// exponent-dependent phase that the limit does not remove.
std::vector<SweepPoint> wavefunction_limit_sweep(const NonRelParams& p, QuantumNumbers q,
                                                 const std::vector<double>& mu_values,
                                                 const std::vector<double>& xi_grid);

// Least-squares slope of log(value) against log(mu); -1 means a 1/mu law.
double loglog_slope(const std::vector<SweepPoint>& points);

}  // namespace relosc
