#include "relosc/verification.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "relosc/cdhahn.hpp"
#include "relosc/errors.hpp"
#include "relosc/format.hpp"
#include "relosc/special_functions.hpp"

namespace relosc {
namespace {

void check_grid_positive(std::span<const double> grid) {
  if (grid.empty()) throw std::domain_error("residual check: empty grid");
  for (double rho : grid) {
    if (!(rho > 0.0) || !std::isfinite(rho)) {
      throw std::domain_error("residual check: grid points must be positive and finite");
    }
  }
}

void finalize(ResidualReport& r) {
  r.max_abs_residual = 0.0;
  r.max_relative_residual = 0.0;
  for (std::size_t i = 0; i < r.residuals.size(); ++i) {
    r.max_abs_residual = std::max(r.max_abs_residual, std::abs(r.residuals[i]));
    r.max_relative_residual = std::max(r.max_relative_residual, r.relative[i]);
  }
}

double rel_denominator(std::initializer_list<Complex> terms) {
  double m = 0.0;
  for (const Complex& t : terms) m = std::max(m, std::abs(t));
  return m > 0.0 ? m : 1.0;
}

}  // namespace

void ResidualReport::write_csv(std::ostream& os) const {
  os << "rho,re_residual,im_residual,rel_residual\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    os << fmt_sci(grid[i]) << ',' << fmt_sci(residuals[i].real()) << ','
       << fmt_sci(residuals[i].imag()) << ',' << fmt_sci(relative[i]) << '\n';
  }
}

std::string ResidualReport::summary_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["omega0"] = omega0;
  j["g0"] = g0;
  j["n"] = n;
  j["l"] = l;
  j["points"] = grid.size();
  j["skipped"] = skipped.size();
  j["max_abs_residual"] = max_abs_residual;
  j["max_relative_residual"] = max_relative_residual;
  return j.dump();
}

ResidualReport radial_equation_residual(const DimensionlessParams& d, QuantumNumbers q,
                                        std::span<const double> grid,
                                        const ResidualOptions& opt) {
  check_grid_positive(grid);
  if (classify_regime(d, q.l) == SpectrumRegime::Collapse) {
    throw RegimeError("radial_equation_residual: no bound state in the collapse regime");
  }
  const Complex a = opt.alpha_scale * alpha_l(d, q.l);
  const Complex v = opt.nu_scale * nu_l(d, q.l);
  const RadialWavefunction wf(d, q, a, v);
  const Complex e_hw = opt.energy_scale * (2.0 * q.n + a + v) + opt.energy_offset;
  const double p_coeff = 2.0 * d.g0 + static_cast<double>(q.l) * (q.l + 1.0);

  // Polynomial magnitudes over the grid decide which points sit too close to
  // a zero of S_n to carry a meaningful relative residual.
  std::vector<double> poly_mag(grid.size());
  double poly_peak = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    poly_mag[i] = std::abs(wf.polynomial(Complex(grid[i] * grid[i])));
    poly_peak = std::max(poly_peak, poly_mag[i]);
  }

  ResidualReport rep;
  rep.check = "radial";
  rep.omega0 = d.omega0;
  rep.g0 = d.g0;
  rep.n = q.n;
  rep.l = q.l;
  const Complex i_unit(0.0, 1.0);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double rho = grid[i];
    if (poly_mag[i] < opt.zero_skip_tol * poly_peak) {
      rep.skipped.push_back(rho);
      continue;
    }
    const Complex r_plus = wf(rho + i_unit);
    const Complex r_minus = wf(rho - i_unit);
    const Complex r_here = wf(Complex(rho));
    const Complex rho2 = rho * (rho + i_unit);
    const Complex t_avg_p = 0.5 * r_plus;
    const Complex t_avg_m = 0.5 * r_minus;
    const Complex t_osc = 0.5 * d.omega0 * d.omega0 * rho2 * r_plus;
    const Complex t_cent = p_coeff / (2.0 * rho2) * r_plus;
    const Complex rhs = d.omega0 * e_hw * r_here;
    const Complex res = t_avg_p + t_avg_m + t_osc + t_cent - rhs;
    rep.grid.push_back(rho);
    rep.residuals.push_back(res);
    rep.relative.push_back(std::abs(res) /
                           rel_denominator({t_avg_p, t_avg_m, t_osc, t_cent, rhs}));
  }
  finalize(rep);
  return rep;
}

ResidualReport omega_equation_residual(const DimensionlessParams& d, QuantumNumbers q,
                                       std::span<const double> grid,
                                       const ResidualOptions& opt) {
  check_grid_positive(grid);
  if (q.n < 0 || q.l < 0) throw std::domain_error("quantum numbers must be >= 0");
  const Complex a = opt.alpha_scale * alpha_l(d, q.l);
  const Complex v = opt.nu_scale * nu_l(d, q.l);
  const Complex e_hw = opt.energy_scale * (2.0 * q.n + a + v) + opt.energy_offset;
  const CdhParams poly{a, v, Complex(0.5)};
  auto omega_at = [&](Complex rho) { return cdh_sum(q.n, rho * rho, poly); };

  std::vector<double> mag(grid.size());
  double peak = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    mag[i] = std::abs(omega_at(Complex(grid[i])));
    peak = std::max(peak, mag[i]);
  }

  ResidualReport rep;
  rep.check = "omega";
  rep.omega0 = d.omega0;
  rep.g0 = d.g0;
  rep.n = q.n;
  rep.l = q.l;
  const Complex i_unit(0.0, 1.0);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double rho = grid[i];
    if (mag[i] < opt.zero_skip_tol * peak) {
      rep.skipped.push_back(rho);
      continue;
    }
    const Complex i_rho(0.0, rho);
    const Complex lhs_m = (a + i_rho) * (v + i_rho) * omega_at(rho - i_unit);
    const Complex lhs_p = -(a - i_rho) * (v - i_rho) * omega_at(rho + i_unit);
    const Complex rhs = 2.0 * i_rho * e_hw * omega_at(Complex(rho));
    const Complex res = lhs_m + lhs_p - rhs;
    rep.grid.push_back(rho);
    rep.residuals.push_back(res);
    rep.relative.push_back(std::abs(res) / rel_denominator({lhs_m, lhs_p, rhs}));
  }
  finalize(rep);
  return rep;
}

ResidualReport generalized_degree_identity_check(std::span<const double> grid) {
  check_grid_positive(grid);
  ResidualReport rep;
  rep.check = "degree-identity";
  const Complex i_unit(0.0, 1.0);
  for (double rho : grid) {
    const Complex lhs = generalized_degree(Complex(rho), Complex(2.0)).to_complex();
    const Complex rhs = rho * (rho + i_unit);
    const Complex res = lhs - rhs;
    rep.grid.push_back(rho);
    rep.residuals.push_back(res);
    rep.relative.push_back(std::abs(res) / rel_denominator({lhs, rhs}));
  }
  finalize(rep);
  return rep;
}

double GramMatrix::max_deviation_from_identity() const {
  double dev = 0.0;
  const int m = n_max + 1;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const Complex target = i == j ? Complex(1.0) : Complex(0.0);
      dev = std::max(dev, std::abs((*this)(i, j) - target));
    }
  }
  return dev;
}

namespace {

constexpr int kGramOrder = 24;

std::vector<Complex> gram_pass(const std::vector<RadialWavefunction>& wf, double rho_max,
                               int panels) {
  const int m = static_cast<int>(wf.size());
  const auto& x = gl_nodes(kGramOrder);
  const auto& w = gl_weights(kGramOrder);
  const double h = rho_max / panels;
  std::vector<std::vector<Complex>> per_panel(
      static_cast<std::size_t>(panels),
      std::vector<Complex>(static_cast<std::size_t>(m) * m, Complex(0.0)));
  std::vector<Complex> vals(static_cast<std::size_t>(m));
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    const double half = 0.5 * h;
    auto& acc = per_panel[static_cast<std::size_t>(p)];
    for (int k = 0; k < kGramOrder; ++k) {
      const double rho = mid + half * x[k];
      for (int n = 0; n < m; ++n) vals[static_cast<std::size_t>(n)] = wf[static_cast<std::size_t>(n)](Complex(rho));
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          acc[static_cast<std::size_t>(i) * m + j] +=
              w[static_cast<std::size_t>(k)] * vals[static_cast<std::size_t>(i)] *
              std::conj(vals[static_cast<std::size_t>(j)]);
        }
      }
    }
    for (auto& e : acc) e *= half;
  }
  std::vector<Complex> g(static_cast<std::size_t>(m) * m);
  std::vector<Complex> column(static_cast<std::size_t>(panels));
  for (std::size_t e = 0; e < g.size(); ++e) {
    for (int p = 0; p < panels; ++p) column[static_cast<std::size_t>(p)] = per_panel[static_cast<std::size_t>(p)][e];
    g[e] = pairwise_sum(column);
  }
  return g;
}

double max_entry_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

GramMatrix orthonormality_matrix(const DimensionlessParams& d, int l, int n_max,
                                 const QuadratureSpec& spec) {
  if (l < 0 || n_max < 0) throw std::domain_error("orthonormality_matrix: l, n_max must be >= 0");
  if (spec.node_count < 16) throw std::domain_error("orthonormality_matrix: node budget too small");
  if (classify_regime(d, l) == SpectrumRegime::Collapse) {
    throw RegimeError("orthonormality_matrix: no normalizable states in the collapse regime");
  }

  std::vector<RadialWavefunction> wf;
  wf.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) wf.emplace_back(d, QuantumNumbers{n, l});

  const auto envelope = [&](double rho) {
    double s = 0.0;
    for (const auto& f : wf) s += std::norm(f(Complex(rho)));
    return s;
  };
  constexpr int kProbe = 512;
  const auto peak_and_tail = [&](double rmax) {
    double peak = 0.0, tail = 0.0;
    for (int i = 1; i <= kProbe; ++i) {
      const double v = envelope(rmax * i / kProbe);
      peak = std::max(peak, v);
      if (i == kProbe) tail = v;
    }
    return std::pair<double, double>{peak, tail};
  };

  double rho_max = spec.rho_max;
  if (rho_max > 0.0) {
    const auto [peak, tail] = peak_and_tail(rho_max);
    if (tail > 1e-10 * peak) {
      throw CutoffError("orthonormality_matrix: integrand tail above 1e-10 of its peak at the requested cutoff");
    }
  } else {
    rho_max = 16.0;
    for (int iter = 0;; ++iter) {
      const auto [peak, tail] = peak_and_tail(rho_max);
      if (tail <= 1e-12 * peak) break;
      if (iter >= 60) throw CutoffError("orthonormality_matrix: automatic cutoff search failed");
      rho_max *= 1.4;
    }
  }

  int panels = std::max(1, spec.node_count / kGramOrder);
  GramMatrix g;
  g.n_max = n_max;
  g.rho_max = rho_max;
  if (spec.scheme == QuadratureScheme::FixedComposite) {
    g.values = gram_pass(wf, rho_max, panels);
    g.node_count = panels * kGramOrder;
    return g;
  }
  std::vector<Complex> prev = gram_pass(wf, rho_max, panels);
  for (int iter = 0; iter < 14; ++iter) {
    panels *= 2;
    std::vector<Complex> next = gram_pass(wf, rho_max, panels);
    if (max_entry_diff(prev, next) < 1e-10) {
      g.values = std::move(next);
      g.node_count = panels * kGramOrder;
      return g;
    }
    prev = std::move(next);
  }
  throw std::runtime_error("orthonormality_matrix: panel doubling did not converge");
}

std::vector<double> make_grid(double lo, double hi, int count, bool log_spaced) {
  if (count < 2) throw std::domain_error("make_grid: need at least two points");
  if (!(lo < hi)) throw std::domain_error("make_grid: need lo < hi");
  if (log_spaced && !(lo > 0.0)) throw std::domain_error("make_grid: log spacing needs lo > 0");
  std::vector<double> g(static_cast<std::size_t>(count));
  if (log_spaced) {
    const double la = std::log(lo), lb = std::log(hi);
    for (int i = 0; i < count; ++i) {
      g[static_cast<std::size_t>(i)] = std::exp(la + (lb - la) * i / (count - 1));
    }
  } else {
    for (int i = 0; i < count; ++i) {
      g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
    }
  }
  g.front() = lo;
  g.back() = hi;
  return g;
}

}  // namespace relosc
