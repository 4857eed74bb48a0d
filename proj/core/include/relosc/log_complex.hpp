#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace relosc {

using Complex = std::complex<double>;

// Wrap an angle to the principal interval (-pi, pi].
inline double wrap_phase(double phi) {
  double w = std::remainder(phi, 2.0 * std::numbers::pi);
  if (w <= -std::numbers::pi) w += 2.0 * std::numbers::pi;
  return w;
}

// Complex scalar stored as (ln|z|, arg z).  Gamma factors with log-magnitudes
// of order 1e7 combine without overflow; conversion back to a plain complex
// happens once, after all factors of a product have been accumulated.
// Zero is log_mag = -inf with phase 0.
class LogComplex {
 public:
  LogComplex() : log_mag_(-std::numeric_limits<double>::infinity()), phase_(0.0) {}
  LogComplex(double log_mag, double phase) : log_mag_(log_mag), phase_(wrap_phase(phase)) {}

  static LogComplex zero() { return {}; }
  static LogComplex one() { return {0.0, 0.0}; }

  static LogComplex from_complex(Complex z) {
    if (z == 0.0) return zero();
    return {std::log(std::abs(z)), std::arg(z)};
  }

  // Throws std::overflow_error when the magnitude does not fit in a double.
  Complex to_complex() const {
    if (is_zero()) return {0.0, 0.0};
    static const double kMaxLog = std::log(std::numeric_limits<double>::max());
    if (log_mag_ > kMaxLog) throw std::overflow_error("LogComplex: magnitude overflows double");
    double r = std::exp(log_mag_);
    return {r * std::cos(phase_), r * std::sin(phase_)};
  }

  double log_mag() const { return log_mag_; }
  double phase() const { return phase_; }
  double abs() const { return is_zero() ? 0.0 : std::exp(log_mag_); }
  bool is_zero() const { return std::isinf(log_mag_) && log_mag_ < 0.0; }

  LogComplex& operator*=(const LogComplex& o) {
    log_mag_ += o.log_mag_;
    phase_ = wrap_phase(phase_ + o.phase_);
    return *this;
  }
  LogComplex& operator/=(const LogComplex& o) {
    if (o.is_zero()) throw std::domain_error("LogComplex: division by zero");
    log_mag_ -= o.log_mag_;
    phase_ = wrap_phase(phase_ - o.phase_);
    return *this;
  }
  friend LogComplex operator*(LogComplex a, const LogComplex& b) { return a *= b; }
  friend LogComplex operator/(LogComplex a, const LogComplex& b) { return a /= b; }

  // Principal square root: phase halves into (-pi/2, pi/2].
  LogComplex sqrt() const {
    if (is_zero()) return zero();
    return {log_mag_ / 2.0, phase_ / 2.0};
  }

 private:
  double log_mag_;
  double phase_;
};

}  // namespace relosc
