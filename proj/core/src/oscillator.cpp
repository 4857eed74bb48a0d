#include "relosc/oscillator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "relosc/errors.hpp"
#include "relosc/special_functions.hpp"

namespace relosc {
namespace {

void check_quantum_numbers(QuantumNumbers q) {
  if (q.n < 0) throw std::domain_error("quantum number n must be >= 0");
  if (q.l < 0) throw std::domain_error("quantum number l must be >= 0");
}

// C_nl for explicit exponents; the trial-function constructor reuses it
// without any regime gate.
LogComplex norm_from_exponents(int n, Complex alpha, Complex nu) {
  const double dn = static_cast<double>(n);
  const LogComplex den = log_gamma(Complex(dn + 1.0)) * log_gamma(dn + alpha + nu) *
                         log_gamma(dn + alpha + 0.5) * log_gamma(dn + nu + 0.5);
  const LogComplex c = (LogComplex(std::log(2.0), 0.0) / den).sqrt();
  // i^alpha in the ansatz has magnitude e^{-pi Im(alpha)/2}; compensate so the
  // states stay unit-norm off the real-alpha axis.  Exactly 1 for real alpha.
  return LogComplex(0.5 * std::numbers::pi * alpha.imag(), 0.0) * c;
}

}  // namespace

DimensionlessParams DimensionlessParams::make(double omega0, double g0) {
  if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
    throw std::domain_error("omega0 must be positive and finite");
  }
  if (!std::isfinite(g0)) throw std::domain_error("g0 must be finite");
  return {omega0, g0, 1.0 / omega0};
}

DimensionlessParams to_dimensionless(const PhysicalParams& p) {
  if (!(p.m > 0.0) || !(p.omega > 0.0) || !(p.c > 0.0) || !(p.hbar > 0.0)) {
    throw std::domain_error("m, omega, c, hbar must all be positive");
  }
  if (!std::isfinite(p.c)) {
    throw std::domain_error("c must be finite here; the c -> inf limit has its own entry points");
  }
  const double mc2 = p.m * p.c * p.c;
  return DimensionlessParams::make(p.hbar * p.omega / mc2, p.m * p.g / (p.hbar * p.hbar));
}

double inner_discriminant(const DimensionlessParams& d, int l) {
  if (l < 0) throw std::domain_error("quantum number l must be >= 0");
  const double ll = static_cast<double>(l) * (l + 1.0);
  return 1.0 - 8.0 * d.g0 * d.omega0 * d.omega0 - 4.0 * d.omega0 * d.omega0 * ll;
}

// The two radicands share the structure 1 + (2/omega0^2)(1 -+ sqrt(D)).  For
// D < 0 they are exact IEEE conjugates, so alpha == conj(nu) bit for bit and
// alpha + nu is exactly real.
static Complex exponent_root(const DimensionlessParams& d, int l, double sign) {
  const Complex sqrt_d = std::sqrt(Complex(inner_discriminant(d, l)));
  const double two_over_w2 = 2.0 / (d.omega0 * d.omega0);
  Complex radicand = 1.0 + two_over_w2 * (1.0 + sign * sqrt_d);
  // sign * sqrt_d leaves a negative zero in the imaginary part when D >= 0;
  // scrub it so a negative radicand resolves to the principal root +i sqrt.
  if (radicand.imag() == 0.0) radicand = Complex(radicand.real(), 0.0);
  return 0.5 + 0.5 * std::sqrt(radicand);
}

Complex alpha_l(const DimensionlessParams& d, int l) { return exponent_root(d, l, -1.0); }
Complex nu_l(const DimensionlessParams& d, int l) { return exponent_root(d, l, +1.0); }

SpectrumRegime classify_regime(const DimensionlessParams& d, int l) {
  const double disc = inner_discriminant(d, l);
  if (disc < 0.0) return SpectrumRegime::ConjugatePair;
  const double radicand =
      1.0 + (2.0 / (d.omega0 * d.omega0)) * (1.0 - std::sqrt(disc));
  return radicand < 0.0 ? SpectrumRegime::Collapse : SpectrumRegime::Real;
}

// Round to the nearest multiple of 2^-45.  Multiplying by a power of two and
// std::round are exact, so this is the identity for |x| >= 128 (where doubles
// are already coarser than the grid) and moves smaller values by < 2^-46.
static double snap_to_grid(double x) {
  const double scale = 0x1p45;
  return std::round(x * scale) / scale;
}

SpectrumEntry energy(const DimensionlessParams& d, QuantumNumbers q, double mc2) {
  check_quantum_numbers(q);
  if (!(mc2 > 0.0) || !std::isfinite(mc2)) throw std::domain_error("mc2 must be positive");
  const Complex a = alpha_l(d, q.l);
  const Complex v = nu_l(d, q.l);
  const SpectrumRegime regime = classify_regime(d, q.l);
  SpectrumEntry e;
  e.n = q.n;
  e.l = q.l;
  e.alpha = a;
  e.nu = v;
  // alpha + nu is snapped to a fixed 2^-45 grid before adding 2n: the sum is
  // then exact for any level below 256, so adjacent levels differ by exactly
  // 2 hbar omega instead of wobbling by an ulp where 2n + alpha + nu crosses
  // a binade.  The snap moves each level by < 3e-14 hbar omega.
  const Complex s = a + v;
  const Complex t(2.0 * q.n + snap_to_grid(s.real()), snap_to_grid(s.imag()));
  e.energy = mc2 * d.omega0 * t;
  e.regime = regime;
  e.is_real_regime = regime == SpectrumRegime::Real;
  return e;
}

double collapse_threshold_g0(double omega0, int l) {
  if (l < 0) throw std::domain_error("quantum number l must be >= 0");
  if (omega0 < 0.0 || !std::isfinite(omega0)) {
    throw std::domain_error("omega0 must be non-negative and finite");
  }
  const double ll = static_cast<double>(l) * (l + 1.0);
  return -1.0 / 8.0 - omega0 * omega0 / 32.0 - ll / 2.0;
}

double collapse_threshold(const DimensionlessParams& d, int l) {
  return collapse_threshold_g0(d.omega0, l);
}

double collapse_threshold(const PhysicalParams& p, int l) {
  const double omega0 = p.hbar * p.omega / (p.m * p.c * p.c);
  return collapse_threshold_g0(omega0, l) * p.hbar * p.hbar / p.m;
}

LogComplex norm_constant(const DimensionlessParams& d, QuantumNumbers q) {
  check_quantum_numbers(q);
  if (classify_regime(d, q.l) == SpectrumRegime::Collapse) {
    throw RegimeError("norm_constant: no normalizable state in the collapse regime");
  }
  return norm_from_exponents(q.n, alpha_l(d, q.l), nu_l(d, q.l));
}

RadialWavefunction::RadialWavefunction(const DimensionlessParams& d, QuantumNumbers q)
    : d_(d), q_(q) {
  check_quantum_numbers(q);
  if (classify_regime(d, q.l) == SpectrumRegime::Collapse) {
    throw RegimeError("RadialWavefunction: no normalizable state in the collapse regime");
  }
  alpha_ = alpha_l(d, q.l);
  nu_ = nu_l(d, q.l);
  norm_ = norm_from_exponents(q.n, alpha_, nu_);
  poly_ = {alpha_, nu_, Complex(0.5)};
}

RadialWavefunction::RadialWavefunction(const DimensionlessParams& d, QuantumNumbers q,
                                       Complex alpha, Complex nu)
    : d_(d), q_(q), alpha_(alpha), nu_(nu) {
  check_quantum_numbers(q);
  norm_ = norm_from_exponents(q.n, alpha_, nu_);
  poly_ = {alpha_, nu_, Complex(0.5)};
}

Complex RadialWavefunction::operator()(Complex rho) const {
  LogComplex v = norm_ * neg_rho_degree(rho, alpha_) * m_factor(rho, nu_, d_.omega0);
  v *= LogComplex::from_complex(cdh_sum(q_.n, rho * rho, poly_));
  return v.to_complex();
}

Complex RadialWavefunction::polynomial(Complex rho_sq) const {
  return cdh_sum(q_.n, rho_sq, poly_);
}

Complex radial_wavefunction(const DimensionlessParams& d, QuantumNumbers q, Complex rho) {
  return RadialWavefunction(d, q)(rho);
}

Complex spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0) throw std::domain_error("spherical_harmonic: l must be >= 0");
  const int am = m < 0 ? -m : m;
  if (am > l) throw std::domain_error("spherical_harmonic: |m| must be <= l");
  const double plm =
      std::sph_legendre(static_cast<unsigned>(l), static_cast<unsigned>(am), theta);
  const double sign = (m < 0 && (am % 2) != 0) ? -1.0 : 1.0;
  return sign * plm * std::polar(1.0, m * phi);
}

}  // namespace relosc
