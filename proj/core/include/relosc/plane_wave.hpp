#pragma once

#include <vector>

#include "relosc/log_complex.hpp"

namespace relosc {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const;
  Vec3 normalized() const;  // domain_error on the zero vector
};

struct MomentumPoint {
  Vec3 p;
  double p0 = 0.0;  // sqrt(p.p + (mc)^2), the on-shell energy over c

  static MomentumPoint on_shell(const Vec3& p, double m, double c);
};

// Relativistic plane wave
//   xi(r, p) = ((p0 - p.n) / (m c))^(-1 - i r m c / hbar),   n = r / |r|.
// The base is strictly positive (p0 > |p|), so the power is single-valued:
// exp((-1 - i r m c / hbar) ln base).  The r -> 0 direction matters, so the
// zero vector is a domain_error; pass an explicit direction for that limit.
Complex plane_wave(const Vec3& r, const Vec3& p, double m, double c, double hbar);
Complex plane_wave(double r, const Vec3& direction, const Vec3& p, double m, double c,
                   double hbar);

struct LimitPoint {
  double c = 0.0;
  double deviation = 0.0;  // |xi - exp(i p.r / hbar)| at this c
};

// Deviation from the Euclidean wave exp(i p.r / hbar) for each c; decreasing
// in c, and identically zero at p = 0 for every c.
std::vector<LimitPoint> euclidean_limit_check(const Vec3& r, const Vec3& p, double m,
                                              double hbar, const std::vector<double>& c_values);

}  // namespace relosc
