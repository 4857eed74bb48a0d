#include "relosc/nonrel.hpp"

#include <cmath>
#include <stdexcept>

#include "relosc/errors.hpp"

namespace relosc {
namespace {

void check_params(const NonRelParams& p) {
  if (!(p.m > 0.0) || !(p.omega > 0.0) || !(p.hbar > 0.0)) {
    throw std::domain_error("m, omega, hbar must be positive");
  }
  if (!std::isfinite(p.g)) throw std::domain_error("g must be finite");
}

double radicand(const NonRelParams& p, int l) {
  if (l < 0) throw std::domain_error("quantum number l must be >= 0");
  return (2.0 * l + 1.0) * (2.0 * l + 1.0) + 8.0 * p.m * p.g / (p.hbar * p.hbar);
}

}  // namespace

double NonRelParams::limit_exponent_s(int l) const {
  check_params(*this);
  const double rad = radicand(*this, l);
  if (rad < 0.0) {
    throw BranchError("limit_exponent_s: coupling below the critical attraction, s is complex");
  }
  return (std::sqrt(rad) - 1.0) / 4.0;
}

double nonrel_energy(const NonRelParams& p, QuantumNumbers q) {
  if (q.n < 0) throw std::domain_error("quantum number n must be >= 0");
  return p.hbar * p.omega * (2.0 * q.n + 2.0 * p.limit_exponent_s(q.l) + 1.5);
}

Complex nonrel_energy_complex(const NonRelParams& p, QuantumNumbers q) {
  check_params(p);
  if (q.n < 0) throw std::domain_error("quantum number n must be >= 0");
  const Complex s = (std::sqrt(Complex(radicand(p, q.l))) - 1.0) / 4.0;
  return p.hbar * p.omega * (2.0 * q.n + 2.0 * s + 1.5);
}

double nonrel_collapse_threshold_g(const NonRelParams& p, int l) {
  check_params(p);
  if (l < 0) throw std::domain_error("quantum number l must be >= 0");
  return -(2.0 * l + 1.0) * (2.0 * l + 1.0) / 8.0 * p.hbar * p.hbar / p.m;
}

double laguerre(int n, double a, double x) {
  if (n < 0) throw std::domain_error("laguerre: negative degree");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + a - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + a - x) * cur - (k + a) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double nonrel_radial_wavefunction(const NonRelParams& p, QuantumNumbers q, double xi) {
  if (q.n < 0) throw std::domain_error("quantum number n must be >= 0");
  if (xi < 0.0 || !std::isfinite(xi)) throw std::domain_error("xi must be >= 0");
  const double s = p.limit_exponent_s(q.l);
  if (xi == 0.0) return 0.0;  // 2s + 1 >= 1/2 > 0
  const double log_norm =
      0.5 * (std::log(2.0) + std::lgamma(q.n + 1.0) - std::lgamma(q.n + 2.0 * s + 1.5));
  const double log_env = (2.0 * s + 1.0) * std::log(xi) - 0.5 * xi * xi;
  return std::exp(log_norm + log_env) * laguerre(q.n, 2.0 * s + 0.5, xi * xi);
}

std::vector<SweepPoint> energy_limit_sweep(const NonRelParams& p, QuantumNumbers q,
                                           const std::vector<double>& mu_values) {
  const double e_nr = nonrel_energy(p, q);
  const double g0 = p.m * p.g / (p.hbar * p.hbar);
  std::vector<SweepPoint> out;
  out.reserve(mu_values.size());
  for (double mu : mu_values) {
    if (!(mu > 0.0) || !std::isfinite(mu)) throw std::domain_error("mu must be positive");
    const auto d = DimensionlessParams::make(1.0 / mu, g0);
    // mc^2 = mu hbar omega; E - mc^2 in the same units as e_nr.
    const SpectrumEntry e = energy(d, q, mu * p.hbar * p.omega);
    out.push_back({mu, std::abs(e.energy.real() - mu * p.hbar * p.omega - e_nr)});
  }
  return out;
}

std::vector<SweepPoint> wavefunction_limit_sweep(const NonRelParams& p, QuantumNumbers q,
                                                 const std::vector<double>& mu_values,
                                                 const std::vector<double>& xi_grid) {
  if (xi_grid.empty()) throw std::domain_error("wavefunction_limit_sweep: empty xi grid");
  const double g0 = p.m * p.g / (p.hbar * p.hbar);
  std::vector<double> target(xi_grid.size());
  for (std::size_t i = 0; i < xi_grid.size(); ++i) {
    target[i] = std::fabs(nonrel_radial_wavefunction(p, q, xi_grid[i]));
  }
  std::vector<SweepPoint> out;
  out.reserve(mu_values.size());
  for (double mu : mu_values) {
    if (!(mu > 0.0) || !std::isfinite(mu)) throw std::domain_error("mu must be positive");
    const RadialWavefunction wf(DimensionlessParams::make(1.0 / mu, g0), q);
    const double scale = std::pow(mu, 0.25);
    const double root_mu = std::sqrt(mu);
    double sup = 0.0;
    for (std::size_t i = 0; i < xi_grid.size(); ++i) {
      const double rel = scale * std::abs(wf(Complex(root_mu * xi_grid[i])));
      sup = std::max(sup, std::fabs(rel - target[i]));
    }
    out.push_back({mu, sup});
  }
  return out;
}

double loglog_slope(const std::vector<SweepPoint>& points) {
  if (points.size() < 2) throw std::domain_error("loglog_slope: need at least two points");
  double sx = 0.0, sy = 0.0;
  for (const auto& p : points) {
    if (!(p.mu > 0.0) || !(p.value > 0.0)) {
      throw std::domain_error("loglog_slope: points must be positive");
    }
    sx += std::log(p.mu);
    sy += std::log(p.value);
  }
  const double mx = sx / points.size(), my = sy / points.size();
  double num = 0.0, den = 0.0;
  for (const auto& p : points) {
    const double dx = std::log(p.mu) - mx;
    num += dx * (std::log(p.value) - my);
    den += dx * dx;
  }
  if (den == 0.0) throw std::domain_error("loglog_slope: degenerate mu values");
  return num / den;
}

}  // namespace relosc
