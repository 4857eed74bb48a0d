#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "relosc/oscillator.hpp"
#include "relosc/quadrature.hpp"

namespace relosc {

// Per-point residuals of a finite-difference identity over a rho grid.
// `relative` normalizes each point by the largest participating term, so a
// residual of 1e-12 means twelve digits of cancellation actually happened.
struct ResidualReport {
  std::string check;           // "radial", "omega", "degree-identity"
  double omega0 = 0.0, g0 = 0.0;
  int n = -1, l = -1;          // -1 where not applicable
  std::vector<double> grid;    // points actually evaluated
  std::vector<Complex> residuals;
  std::vector<double> relative;
  std::vector<double> skipped;  // points dropped near polynomial zeros
  double max_abs_residual = 0.0;
  double max_relative_residual = 0.0;

  // CSV columns: rho,re_residual,im_residual,rel_residual (LF line ends).
  void write_csv(std::ostream& os) const;
  // {check, omega0, g0, n, l, points, skipped, max_abs_residual, max_relative_residual}
  std::string summary_json() const;
};

// Detuning hooks: residuals of the exact solution sit at rounding level, and
// these knobs let tests confirm the residual actually measures the equation
// (a 1% detuning must inflate it by orders of magnitude).
struct ResidualOptions {
  double energy_offset = 0.0;   // added to E/(hbar omega)
  double energy_scale = 1.0;    // multiplies E/(hbar omega)
  double alpha_scale = 1.0;     // multiplies alpha in the trial function
  double nu_scale = 1.0;
  double zero_skip_tol = 1e-6;  // skip points with |S_n| below this times the grid max
};

// Residual of the radial finite-difference equation
//   (1/2)[R(rho+i) + R(rho-i)] + (1/2) omega0^2 rho^(2) R(rho+i)
//     + ((2 g0 + l(l+1)) / (2 rho^(2))) R(rho+i)  =  (E/mc^2) R(rho),
// with rho^(2) = rho(rho+i) and E/mc^2 = omega0 (2n + alpha + nu).
// RegimeError in the collapse regime.
ResidualReport radial_equation_residual(const DimensionlessParams& d, QuantumNumbers q,
                                        std::span<const double> grid,
                                        const ResidualOptions& opt = {});

// Residual of the polynomial-factor equation (Omega = S_n(rho^2; alpha, nu, 1/2)):
//   (alpha+i rho)(nu+i rho) Omega(rho-i) - (alpha-i rho)(nu-i rho) Omega(rho+i)
//     = 2 i rho (E/hbar omega) Omega(rho).
// Follows from the radial equation; the n = 0 case is an algebraic identity,
// so its residual must sit at rounding level.
ResidualReport omega_equation_residual(const DimensionlessParams& d, QuantumNumbers q,
                                       std::span<const double> grid,
                                       const ResidualOptions& opt = {});

// Numeric check of rho^(2) = rho (rho + i) on a real grid.
ResidualReport generalized_degree_identity_check(std::span<const double> grid);

struct GramMatrix {
  int n_max = 0;
  std::vector<Complex> values;  // (n_max+1)^2, row-major
  double rho_max = 0.0;         // cutoff actually used
  int node_count = 0;           // total nodes actually used

  Complex operator()(int i, int j) const {
    return values[static_cast<std::size_t>(i) * (n_max + 1) + j];
  }
  double max_deviation_from_identity() const;
};

// G[n][m] = Int_0^inf R_nl R*_ml d rho for n, m = 0..n_max, by composite
// Gauss-Legendre quadrature.  Identity to quadrature accuracy in the Real and
// ConjugatePair regimes; RegimeError in the collapse regime; CutoffError when
// a fixed cutoff leaves an integrand tail above 1e-10 of its peak.
GramMatrix orthonormality_matrix(const DimensionlessParams& d, int l, int n_max,
                                 const QuadratureSpec& spec = {});

// Evenly spaced grid, linear or logarithmic (log requires lo > 0); count >= 2.
std::vector<double> make_grid(double lo, double hi, int count, bool log_spaced);

}  // namespace relosc
