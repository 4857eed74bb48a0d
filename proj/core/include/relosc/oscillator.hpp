#pragma once

#include "relosc/cdhahn.hpp"
#include "relosc/log_complex.hpp"

namespace relosc {

// Physical inputs.  Defaults are the natural-unit template m = omega = hbar = c = 1.
struct PhysicalParams {
  double m = 1.0;      // mass
  double omega = 1.0;  // oscillator frequency
  double c = 1.0;      // speed of light
  double g = 0.0;      // singular-potential coupling (g/r^2 term)
  double hbar = 1.0;
};

// omega0 = hbar omega / (m c^2), g0 = m g / hbar^2, mu = m c^2 / (hbar omega).
// mu * omega0 == 1 to machine precision.
struct DimensionlessParams {
  double omega0;
  double g0;
  double mu;

  static DimensionlessParams make(double omega0, double g0);
};

DimensionlessParams to_dimensionless(const PhysicalParams& p);

struct QuantumNumbers {
  int n = 0;  // radial
  int l = 0;  // orbital
};

// Real:          alpha, nu real, both > 1/2; everything as in the plain case.
// ConjugatePair: inner discriminant D < 0, alpha = conj(nu); the spectrum is
//                still real and the states are still normalizable.
// Collapse:      alpha complex with nu real; complex energies, no normalizable
//                bound state (coupling below the critical attraction).
enum class SpectrumRegime { Real, ConjugatePair, Collapse };

// D = 1 - 8 g0 omega0^2 - 4 omega0^2 l (l+1).
double inner_discriminant(const DimensionlessParams& d, int l);

// alpha_l = 1/2 + (1/2) sqrt(1 + (2/omega0^2)(1 - sqrt(D)))
// nu_l    = 1/2 + (1/2) sqrt(1 + (2/omega0^2)(1 + sqrt(D)))
// Principal square roots throughout; complex values are returned, not errors,
// so callers can trace real and imaginary spectral branches through the
// collapse point.
Complex alpha_l(const DimensionlessParams& d, int l);
Complex nu_l(const DimensionlessParams& d, int l);

SpectrumRegime classify_regime(const DimensionlessParams& d, int l);

struct SpectrumEntry {
  int n, l;
  Complex alpha, nu;
  Complex energy;       // hbar omega (2n + alpha + nu), hbar omega = mc2 * omega0
  bool is_real_regime;  // regime == SpectrumRegime::Real
  SpectrumRegime regime;
};

// E_nl = hbar omega (2n + alpha_l + nu_l); equidistant in n with spacing
// 2 hbar omega.  mc2 sets the energy scale (pass 1/omega0 for units of
// hbar omega).  In the collapse regime energies come in conjugate pairs;
// the entry carries the principal branch (Im > 0).
SpectrumEntry energy(const DimensionlessParams& d, QuantumNumbers q, double mc2);

// Critical coupling: the spectrum is real iff g0 >= g0_crit,
//   g0_crit = -1/8 - omega0^2/32 - l(l+1)/2.
// omega0 = 0 gives the nonrelativistic threshold -(2l+1)^2/8.
double collapse_threshold_g0(double omega0, int l);
double collapse_threshold(const DimensionlessParams& d, int l);
// Physical units: g_crit = -hbar^2/(8m) - hbar^2 omega0^2/(32m) - hbar^2 l(l+1)/(2m).
double collapse_threshold(const PhysicalParams& p, int l);

// Normalization constant
//   C_nl = sqrt(2 / (n! Gamma(n+alpha+nu) Gamma(n+alpha+1/2) Gamma(n+nu+1/2)))
// making Int_0^inf R_nl R*_ml d rho = delta_nm.  In the conjugate-pair regime
// the i^alpha prefactor of the ansatz has magnitude e^{-pi Im(alpha)/2}, so
// C_nl carries the compensating factor e^{pi Im(alpha)/2} (exactly 1 when
// alpha is real).  RegimeError in the collapse regime.
LogComplex norm_constant(const DimensionlessParams& d, QuantumNumbers q);

// R_nl(rho) = C_nl (-rho)^(alpha_l) M_{nu_l}(rho) S_n(rho^2; alpha_l, nu_l, 1/2),
// composed in log space and converted once at the end.  Valid for complex rho
// (the finite-difference equation samples rho +- i).  R(0) = 0 exactly.
class RadialWavefunction {
 public:
  // Throws RegimeError in the collapse regime.
  RadialWavefunction(const DimensionlessParams& d, QuantumNumbers q);
  // Trial-function variant with explicit exponents; used by the verification
  // layer to detune alpha/nu and watch residuals blow up.  No regime check.
  RadialWavefunction(const DimensionlessParams& d, QuantumNumbers q, Complex alpha, Complex nu);

  Complex operator()(Complex rho) const;

  // The polynomial factor S_n(rho_sq) alone; grid builders use it to skip
  // points near polynomial zeros.
  Complex polynomial(Complex rho_sq) const;

  Complex alpha() const { return alpha_; }
  Complex nu() const { return nu_; }
  LogComplex norm() const { return norm_; }
  const DimensionlessParams& params() const { return d_; }
  QuantumNumbers quantum_numbers() const { return q_; }

 private:
  DimensionlessParams d_;
  QuantumNumbers q_;
  Complex alpha_, nu_;
  LogComplex norm_;
  CdhParams poly_;
};

Complex radial_wavefunction(const DimensionlessParams& d, QuantumNumbers q, Complex rho);

// Orthonormalized spherical harmonic Y_lm(theta, phi) (Condon-Shortley
// phase); provided so the full psi = R_nl(rho)/rho Y_lm can be exported.
// std::domain_error for |m| > l.
Complex spherical_harmonic(int l, int m, double theta, double phi);

}  // namespace relosc
