#include "relosc/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "relosc/errors.hpp"

namespace relosc {
namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficients):
// relative error below 1e-15 across Re z >= 1/2.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosC = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

// Principal log Gamma on Re z >= 1/2 as a plain complex number (its imaginary
// part stays well inside a double there, no wrap needed yet).
Complex lanczos_log_gamma(Complex z) {
  Complex sum = kLanczosC[0];
  for (std::size_t k = 1; k < kLanczosC.size(); ++k) {
    sum += kLanczosC[k] / (z - 1.0 + static_cast<double>(k));
  }
  const Complex base = z + (kLanczosG - 0.5);
  return (z - 0.5) * std::log(base) - base + 0.5 * std::log(2.0 * kPi) + std::log(sum);
}

// log(sin(pi z)) for Im z >= 0, returned as (ln|sin pi z|, phase) where the
// phase may be unwrapped.  Large imaginary parts take the asymptotic form
// sin(pi z) ~ (i/2) e^{-i pi z}; otherwise z is reduced by its nearest
// integer so the complex sine never overflows (|Im| <= 110 keeps
// |sin| < e^{pi * 110}, far below the double ceiling).
Complex log_sin_pi(Complex z) {
  if (z.imag() > 110.0) {
    return {kPi * z.imag() - std::log(2.0), kPi * (0.5 - z.real())};
  }
  const double n = std::round(z.real());
  const Complex r = z - n;
  const Complex s = std::sin(kPi * r);
  const bool odd = std::fabs(std::fmod(n, 2.0)) > 0.5;
  return {std::log(std::abs(s)), std::arg(s) + (odd ? kPi : 0.0)};
}

bool near_nonpositive_integer(Complex z) {
  if (std::fabs(z.imag()) > 1e-300) return false;
  const double k = std::round(z.real());
  return k <= 0.0 && std::fabs(z.real() - k) <= 1e-300;
}

}  // namespace

LogComplex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::domain_error("log_gamma: non-finite argument");
  }
  if (z.imag() < 0.0) {
    const LogComplex conj = log_gamma(std::conj(z));
    return {conj.log_mag(), -conj.phase()};
  }
  if (z.real() >= 0.5) {
    const Complex w = lanczos_log_gamma(z);
    return {w.real(), w.imag()};
  }
  if (near_nonpositive_integer(z)) {
    throw PoleError("log_gamma: argument at a non-positive integer");
  }
  // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z)), with 1 - z in the
  // Lanczos half-plane.
  const Complex ls = log_sin_pi(z);
  const LogComplex sin_pi_z(ls.real(), ls.imag());
  return LogComplex(std::log(kPi), 0.0) / (sin_pi_z * log_gamma(1.0 - z));
}

LogComplex generalized_degree(Complex rho, Complex delta) {
  if (delta == 0.0) return LogComplex::one();  // rho^(0) == 1 identically
  if (rho == 0.0) {
    if (delta.real() > 0.0) return LogComplex::zero();
    throw PoleError("generalized_degree: rho = 0 with Re(delta) <= 0");
  }
  const Complex minus_i_rho(rho.imag(), -rho.real());
  const LogComplex ipow(-0.5 * kPi * delta.imag(), 0.5 * kPi * delta.real());
  const LogComplex num = log_gamma(delta + minus_i_rho);
  LogComplex den;
  try {
    den = log_gamma(minus_i_rho);
  } catch (const PoleError&) {
    return LogComplex::zero();  // 1/Gamma vanishes at the pole
  }
  return ipow * num / den;
}

LogComplex neg_rho_degree(Complex rho, Complex alpha) { return generalized_degree(-rho, alpha); }

LogComplex m_factor(Complex rho, Complex nu, double omega0) {
  if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
    throw std::domain_error("m_factor: omega0 must be positive and finite");
  }
  const double ln_w = std::log(omega0);
  // omega0^{i rho} = exp((i rho) ln omega0)
  const LogComplex scale(-rho.imag() * ln_w, rho.real() * ln_w);
  const Complex i_rho(-rho.imag(), rho.real());
  return scale * log_gamma(nu + i_rho);
}

Complex pochhammer(Complex a, int n) {
  if (n < 0) throw std::domain_error("pochhammer: negative order");
  Complex r = 1.0;
  for (int k = 0; k < n; ++k) r *= a + static_cast<double>(k);
  return r;
}

}  // namespace relosc
