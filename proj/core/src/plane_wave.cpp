#include "relosc/plane_wave.hpp"

#include <cmath>
#include <stdexcept>

namespace relosc {

double Vec3::norm() const { return std::hypot(x, y, z); }

Vec3 Vec3::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::domain_error("Vec3: cannot normalize the zero vector");
  return {x / n, y / n, z / n};
}

MomentumPoint MomentumPoint::on_shell(const Vec3& p, double m, double c) {
  if (!(m > 0.0) || !(c > 0.0) || !std::isfinite(c)) {
    throw std::domain_error("on_shell: m and c must be positive and finite");
  }
  const double pp = p.dot(p);
  const double mc = m * c;
  // pp == 0 keeps p0 == mc bitwise, so the rest state gives exactly xi == 1.
  return {p, pp == 0.0 ? mc : std::sqrt(pp + mc * mc)};
}

Complex plane_wave(double r, const Vec3& direction, const Vec3& p, double m, double c,
                   double hbar) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw std::domain_error("plane_wave: r must be >= 0");
  if (!(hbar > 0.0)) throw std::domain_error("plane_wave: hbar must be positive");
  const Vec3 n = direction.normalized();
  const MomentumPoint mp = MomentumPoint::on_shell(p, m, c);
  const double mc = m * c;
  const double base = (mp.p0 - p.dot(n)) / mc;
  if (!(base > 0.0)) throw std::domain_error("plane_wave: momentum off the mass shell");
  const double lb = std::log(base);
  // ((p0 - p.n)/mc)^(-1 - i r mc/hbar) = exp(-lb) * exp(-i (r mc/hbar) lb)
  return std::exp(-lb) * std::polar(1.0, -r * mc / hbar * lb);
}

Complex plane_wave(const Vec3& r, const Vec3& p, double m, double c, double hbar) {
  const double rn = r.norm();
  if (rn == 0.0) {
    throw std::domain_error("plane_wave: r = 0 leaves the direction undefined; pass one explicitly");
  }
  return plane_wave(rn, r, p, m, c, hbar);
}

std::vector<LimitPoint> euclidean_limit_check(const Vec3& r, const Vec3& p, double m,
                                              double hbar, const std::vector<double>& c_values) {
  if (!(hbar > 0.0)) throw std::domain_error("euclidean_limit_check: hbar must be positive");
  const Complex target = std::polar(1.0, p.dot(r) / hbar);
  std::vector<LimitPoint> out;
  out.reserve(c_values.size());
  for (double c : c_values) {
    out.push_back({c, std::abs(plane_wave(r, p, m, c, hbar) - target)});
  }
  return out;
}

}  // namespace relosc
