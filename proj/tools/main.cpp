// Command-line surface: spectra, wavefunction tables, residual verification,
// orthonormality checks, limit sweeps, ground-state figure data, plane waves.
// CSV tables are byte-deterministic (%.17e, LF, fixed row order); a one-line
// JSON summary goes to stderr (or replaces the table with --format json).

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "relosc/errors.hpp"
#include "relosc/format.hpp"
#include "relosc/nonrel.hpp"
#include "relosc/oscillator.hpp"
#include "relosc/plane_wave.hpp"
#include "relosc/verification.hpp"

namespace {

using nlohmann::json;
using relosc::Complex;

// %.17e with negative zero normalized: a signed zero cell carries no
// information and only frustrates diffing.
std::string fmt_cell(double x) { return relosc::fmt_sci(x == 0.0 ? 0.0 : x); }

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IntRange {
  int lo = 0, hi = 0;
};

IntRange parse_range(const std::string& text, const char* flag) {
  const auto pos = text.find("..");
  try {
    std::size_t used = 0;
    if (pos == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument("");
      return {v, v};
    }
    const int lo = std::stoi(text.substr(0, pos), &used);
    if (used != pos) throw std::invalid_argument("");
    const int hi = std::stoi(text.substr(pos + 2), &used);
    if (used != text.size() - pos - 2) throw std::invalid_argument("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw ConfigError(std::string(flag) + ": expected N or LO..HI, got '" + text + "'");
  }
}

IntRange checked_range(const std::string& text, const char* flag) {
  const IntRange r = parse_range(text, flag);
  if (r.lo < 0 || r.hi < r.lo) throw ConfigError(std::string(flag) + ": empty or negative range");
  return r;
}

int single_value(const std::string& text, const char* flag) {
  const IntRange r = checked_range(text, flag);
  if (r.lo != r.hi) throw ConfigError(std::string(flag) + ": this command takes a single value");
  return r.lo;
}

double parse_c(const std::string& text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !(v > 0.0)) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("--c: expected a positive number or 'inf', got '" + text + "'");
  }
}

std::vector<double> parse_list(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ConfigError(std::string(flag) + ": invalid number '" + item + "'");
    }
  }
  if (out.empty()) throw ConfigError(std::string(flag) + ": needs at least one value");
  return out;
}

json c_json(double c) {
  if (std::isinf(c)) return "inf";
  return c;
}

void append_row(std::string& csv, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const auto& cell : cells) {
    if (!first) csv += ',';
    csv += cell;
    first = false;
  }
  csv += '\n';
}

// Conjugate partner of a printed value; keeps +0 so zero columns never show
// a negative sign.
double pair_flip(double x) { return x == 0.0 ? 0.0 : -x; }

struct Options {
  double m = 1.0, omega = 1.0, g = 0.0, hbar = 1.0;
  std::string c_text = "1";
  std::string n_text = "0..3", l_text = "0..2";  // range commands
  std::string n_single = "0", l_single = "0";    // single-state commands
  double rho_min = 0.1, rho_max = 30.0;
  int points = 200;
  bool log_grid = false;
  double tolerance = 1e-8;
  std::string out = "-";
  std::string format = "csv";
  // limits
  std::string kind = "energy";
  std::string mu_text = "100,1000,10000";
  double xi_min = 0.05, xi_max = 5.0;
  int xi_points = 200;
  // ortho
  int n_max = 4;
  double ortho_rho_max = 0.0;
  int node_budget = 512;
  bool fixed_quadrature = false;
  // figure1
  double g_min = -1.0, g_max = 1.0;
  int fig_points = 401;
  // planewave
  double px = 0.0, py = 0.0, pz = 0.0;
  double rx = 1.0, ry = 0.0, rz = 0.0;
  std::string c_values_text = "10,100,1000";
};

void write_out(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file '" + path + "'");
  f << content;
}

int deliver(const std::string& csv, json summary, const Options& o, int code) {
  summary["status"] = code == 0 ? "ok" : "verification_failed";
  const std::string line = summary.dump() + "\n";
  if (o.format == "json") {
    write_out(o.out, line);
  } else {
    write_out(o.out, csv);
    std::cerr << line;
  }
  return code;
}

json output_config(const Options& o) {
  return json{{"out", o.out}, {"format", o.format}};
}

// ---------------------------------------------------------------- spectrum

int cmd_spectrum(const Options& o) {
  const IntRange nr = checked_range(o.n_text, "--n");
  const IntRange lr = checked_range(o.l_text, "--l");
  const double c = parse_c(o.c_text);
  std::string csv = "n,l,alpha_re,alpha_im,nu_re,nu_im,E_re,E_im,real_regime\n";
  long rows = 0;
  // In the collapse regime energies come in conjugate pairs: emit +Im then
  // -Im.  real_regime reports "the energy is real" (not collapse); the D < 0
  // conjugate-exponent regime still has a real spectrum and prints true.
  const auto emit = [&](int n, int l, Complex a, Complex v, Complex e) {
    const bool real_spectrum = e.imag() == 0.0;
    const auto one = [&](Complex aa, Complex vv, Complex ee) {
      append_row(csv, {std::to_string(n), std::to_string(l), fmt_cell(aa.real()),
                       fmt_cell(aa.imag()), fmt_cell(vv.real()), fmt_cell(vv.imag()),
                       fmt_cell(ee.real()), fmt_cell(ee.imag()),
                       real_spectrum ? "true" : "false"});
      ++rows;
    };
    one(a, v, e);
    if (!real_spectrum) {
      one({a.real(), pair_flip(a.imag())}, {v.real(), pair_flip(v.imag())},
          {e.real(), pair_flip(e.imag())});
    }
  };
  if (std::isinf(c)) {
    const relosc::NonRelParams np{o.m, o.omega, o.g, o.hbar};
    const double hw = o.hbar * o.omega;
    const Complex nu_inf(std::numeric_limits<double>::infinity(), 0.0);
    for (int l = lr.lo; l <= lr.hi; ++l) {
      for (int n = nr.lo; n <= nr.hi; ++n) {
        const Complex e = relosc::nonrel_energy_complex(np, {n, l});
        const Complex alpha = e / hw - (2.0 * n + 0.5);  // the finite limit 2s+1
        emit(n, l, alpha, nu_inf, e);
      }
    }
  } else {
    const auto d = relosc::to_dimensionless({o.m, o.omega, c, o.g, o.hbar});
    const double mc2 = o.m * c * c;
    for (int l = lr.lo; l <= lr.hi; ++l) {
      for (int n = nr.lo; n <= nr.hi; ++n) {
        const auto e = relosc::energy(d, {n, l}, mc2);
        emit(n, l, e.alpha, e.nu, e.energy);
      }
    }
  }
  json summary = {{"command", "spectrum"},
                  {"config",
                   {{"m", o.m},
                    {"omega", o.omega},
                    {"g", o.g},
                    {"c", c_json(c)},
                    {"hbar", o.hbar},
                    {"n", o.n_text},
                    {"l", o.l_text},
                    {"output", output_config(o)}}},
                  {"results", {{"rows_written", rows}}}};
  return deliver(csv, summary, o, 0);
}

// ------------------------------------------------------------ wavefunction

int cmd_wavefunction(const Options& o) {
  const int n = single_value(o.n_single, "--n");
  const int l = single_value(o.l_single, "--l");
  const double c = parse_c(o.c_text);
  const auto grid = relosc::make_grid(o.rho_min, o.rho_max, o.points, o.log_grid);
  std::string csv = "rho,R_re,R_im\n";
  if (std::isinf(c)) {
    const relosc::NonRelParams np{o.m, o.omega, o.g, o.hbar};
    for (double xi : grid) {
      const double v = relosc::nonrel_radial_wavefunction(np, {n, l}, xi);
      append_row(csv, {fmt_cell(xi), fmt_cell(v), fmt_cell(0.0)});
    }
  } else {
    const auto d = relosc::to_dimensionless({o.m, o.omega, c, o.g, o.hbar});
    const relosc::RadialWavefunction wf(d, {n, l});
    for (double rho : grid) {
      const Complex v = wf(Complex(rho));
      append_row(csv, {fmt_cell(rho), fmt_cell(v.real()), fmt_cell(v.imag())});
    }
  }
  json summary = {{"command", "wavefunction"},
                  {"config",
                   {{"m", o.m},
                    {"omega", o.omega},
                    {"g", o.g},
                    {"c", c_json(c)},
                    {"hbar", o.hbar},
                    {"n", n},
                    {"l", l},
                    {"rho_min", o.rho_min},
                    {"rho_max", o.rho_max},
                    {"points", o.points},
                    {"log_grid", o.log_grid},
                    {"output", output_config(o)}}},
                  {"results", {{"rows_written", grid.size()}}}};
  return deliver(csv, summary, o, 0);
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Options& o) {
  const double c = parse_c(o.c_text);
  if (std::isinf(c)) throw ConfigError("verify: the finite-difference checks need finite c");
  const IntRange nr = checked_range(o.n_text, "--n");
  const IntRange lr = checked_range(o.l_text, "--l");
  if (!(o.tolerance > 0.0)) throw ConfigError("--tolerance must be positive");
  const auto d = relosc::to_dimensionless({o.m, o.omega, c, o.g, o.hbar});
  const auto grid = relosc::make_grid(o.rho_min, o.rho_max, o.points, o.log_grid);

  std::string csv = "check,n,l,rho,re_residual,im_residual,rel_residual\n";
  long rows = 0;
  double max_abs = 0.0, max_rel = 0.0;
  const auto add_report = [&](const relosc::ResidualReport& r) {
    for (std::size_t i = 0; i < r.grid.size(); ++i) {
      append_row(csv, {r.check, std::to_string(r.n), std::to_string(r.l), fmt_cell(r.grid[i]),
                       fmt_cell(r.residuals[i].real()), fmt_cell(r.residuals[i].imag()),
                       fmt_cell(r.relative[i])});
      ++rows;
    }
    max_abs = std::max(max_abs, r.max_abs_residual);
    max_rel = std::max(max_rel, r.max_relative_residual);
  };
  for (int l = lr.lo; l <= lr.hi; ++l) {
    for (int n = nr.lo; n <= nr.hi; ++n) {
      add_report(relosc::radial_equation_residual(d, {n, l}, grid));
    }
  }
  for (int l = lr.lo; l <= lr.hi; ++l) {
    for (int n = nr.lo; n <= nr.hi; ++n) {
      add_report(relosc::omega_equation_residual(d, {n, l}, grid));
    }
  }
  add_report(relosc::generalized_degree_identity_check(grid));

  const int code = max_rel < o.tolerance ? 0 : 1;
  json summary = {{"command", "verify"},
                  {"config",
                   {{"m", o.m},
                    {"omega", o.omega},
                    {"g", o.g},
                    {"c", c_json(c)},
                    {"hbar", o.hbar},
                    {"n", o.n_text},
                    {"l", o.l_text},
                    {"rho_min", o.rho_min},
                    {"rho_max", o.rho_max},
                    {"points", o.points},
                    {"log_grid", o.log_grid},
                    {"tolerance", o.tolerance},
                    {"output", output_config(o)}}},
                  {"results",
                   {{"max_abs_residual", max_abs},
                    {"max_rel_residual", max_rel},
                    {"rows_written", rows}}}};
  return deliver(csv, summary, o, code);
}

// ------------------------------------------------------------------ ortho

int cmd_ortho(const Options& o) {
  const double c = parse_c(o.c_text);
  if (std::isinf(c)) throw ConfigError("ortho: orthonormality quadrature needs finite c");
  const int l = single_value(o.l_single, "--l");
  if (o.n_max < 0) throw ConfigError("--n-max must be >= 0");
  if (!(o.tolerance > 0.0)) throw ConfigError("--tolerance must be positive");
  const auto d = relosc::to_dimensionless({o.m, o.omega, c, o.g, o.hbar});
  relosc::QuadratureSpec spec;
  spec.rho_max = o.ortho_rho_max;
  spec.node_count = o.node_budget;
  spec.scheme = o.fixed_quadrature ? relosc::QuadratureScheme::FixedComposite
                                   : relosc::QuadratureScheme::Adaptive;
  const auto gram = relosc::orthonormality_matrix(d, l, o.n_max, spec);

  std::string csv = "i,j,G_re,G_im\n";
  long rows = 0;
  for (int i = 0; i <= o.n_max; ++i) {
    for (int j = 0; j <= o.n_max; ++j) {
      append_row(csv, {std::to_string(i), std::to_string(j), fmt_cell(gram(i, j).real()),
                       fmt_cell(gram(i, j).imag())});
      ++rows;
    }
  }
  const double dev = gram.max_deviation_from_identity();
  const int code = dev < o.tolerance ? 0 : 1;
  json summary = {{"command", "ortho"},
                  {"config",
                   {{"m", o.m},
                    {"omega", o.omega},
                    {"g", o.g},
                    {"c", c_json(c)},
                    {"hbar", o.hbar},
                    {"l", l},
                    {"n_max", o.n_max},
                    {"rho_max", o.ortho_rho_max},
                    {"points", o.node_budget},
                    {"fixed", o.fixed_quadrature},
                    {"tolerance", o.tolerance},
                    {"output", output_config(o)}}},
                  {"results",
                   {{"gram_deviation", dev},
                    {"rho_max_used", gram.rho_max},
                    {"nodes_used", gram.node_count},
                    {"rows_written", rows}}}};
  return deliver(csv, summary, o, code);
}

// ----------------------------------------------------------------- limits

int cmd_limits(const Options& o) {
  const int n = single_value(o.n_single, "--n");
  const int l = single_value(o.l_single, "--l");
  const auto mus = parse_list(o.mu_text, "--mu");
  for (double mu : mus) {
    if (!(mu > 0.0) || mu > 1e6) throw ConfigError("--mu: values must be in (0, 1e6]");
  }
  const relosc::NonRelParams np{o.m, o.omega, o.g, o.hbar};
  std::string csv;
  long rows = 0;
  if (o.kind == "energy") {
    const auto pts = relosc::energy_limit_sweep(np, {n, l}, mus);
    csv = "mu,gap\n";
    for (const auto& p : pts) {
      append_row(csv, {fmt_cell(p.mu), fmt_cell(p.value)});
      ++rows;
    }
  } else {
    const auto xi = relosc::make_grid(o.xi_min, o.xi_max, o.xi_points, o.log_grid);
    const auto pts = relosc::wavefunction_limit_sweep(np, {n, l}, mus, xi);
    csv = "mu,sup_dev\n";
    for (const auto& p : pts) {
      append_row(csv, {fmt_cell(p.mu), fmt_cell(p.value)});
      ++rows;
    }
  }
  json summary = {{"command", "limits"},
                  {"config",
                   {{"m", o.m},
                    {"omega", o.omega},
                    {"g", o.g},
                    {"hbar", o.hbar},
                    {"kind", o.kind},
                    {"n", n},
                    {"l", l},
                    {"mu", o.mu_text},
                    {"xi_min", o.xi_min},
                    {"xi_max", o.xi_max},
                    {"points", o.xi_points},
                    {"log_grid", o.log_grid},
                    {"output", output_config(o)}}},
                  {"results", {{"rows_written", rows}}}};
  return deliver(csv, summary, o, 0);
}

// ---------------------------------------------------------------- figure1

int cmd_figure1(const Options& o) {
  if (o.m != 1.0 || o.omega != 1.0 || o.hbar != 1.0) {
    throw ConfigError("figure1: natural units required (m = omega = hbar = 1)");
  }
  const auto grid = relosc::make_grid(o.g_min, o.g_max, o.fig_points, false);
  std::string csv = "c,l,g,E_re,E_im,E_minus_mc2\n";
  long rows = 0;
  const auto emit = [&](const std::string& c_cell, int l, double g, Complex e, double e_minus) {
    append_row(csv, {c_cell, std::to_string(l), fmt_cell(g), fmt_cell(e.real()),
                     fmt_cell(e.imag()), fmt_cell(e_minus)});
    ++rows;
    if (e.imag() != 0.0) {
      append_row(csv, {c_cell, std::to_string(l), fmt_cell(g), fmt_cell(e.real()),
                       fmt_cell(pair_flip(e.imag())), fmt_cell(e_minus)});
      ++rows;
    }
  };
  for (double c : {1.0, 4.0}) {
    const std::string c_cell = fmt_cell(c);
    const double mc2 = c * c;
    for (int l = 0; l <= 2; ++l) {
      for (double g : grid) {
        const auto d = relosc::to_dimensionless({1.0, 1.0, c, g, 1.0});
        const auto e = relosc::energy(d, {0, l}, mc2);
        emit(c_cell, l, g, e.energy, e.energy.real() - mc2);
      }
    }
  }
  for (int l = 0; l <= 2; ++l) {  // c = inf: plain nonrelativistic energy
    for (double g : grid) {
      const Complex e = relosc::nonrel_energy_complex({1.0, 1.0, g, 1.0}, {0, l});
      emit("inf", l, g, e, e.real());
    }
  }
  json summary = {{"command", "figure1"},
                  {"config",
                   {{"m", o.m},
                    {"omega", o.omega},
                    {"hbar", o.hbar},
                    {"c", {1.0, 4.0, "inf"}},
                    {"l", "0..2"},
                    {"n", 0},
                    {"g_min", o.g_min},
                    {"g_max", o.g_max},
                    {"points", o.fig_points},
                    {"output", output_config(o)}}},
                  {"results", {{"rows_written", rows}}}};
  return deliver(csv, summary, o, 0);
}

// --------------------------------------------------------------- planewave

int cmd_planewave(const Options& o) {
  const auto cs = parse_list(o.c_values_text, "--c-values");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (!(cs[i] > 0.0) || std::isinf(cs[i])) {
      throw ConfigError("--c-values: entries must be finite and positive");
    }
    if (i > 0 && !(cs[i] > cs[i - 1])) {
      throw ConfigError("--c-values: entries must be strictly increasing");
    }
  }
  const relosc::Vec3 r{o.rx, o.ry, o.rz};
  const relosc::Vec3 p{o.px, o.py, o.pz};
  const auto pts = relosc::euclidean_limit_check(r, p, o.m, o.hbar, cs);
  std::string csv = "c,deviation\n";
  long rows = 0;
  for (const auto& pt : pts) {
    append_row(csv, {fmt_cell(pt.c), fmt_cell(pt.deviation)});
    ++rows;
  }
  json summary = {{"command", "planewave"},
                  {"config",
                   {{"m", o.m},
                    {"hbar", o.hbar},
                    {"p", {o.px, o.py, o.pz}},
                    {"r", {o.rx, o.ry, o.rz}},
                    {"c_values", o.c_values_text},
                    {"output", output_config(o)}}},
                  {"results", {{"rows_written", rows}}}};
  return deliver(csv, summary, o, 0);
}

void add_output_flags(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out, "output path for the table ('-' = stdout)");
  sub->add_option("--format", o.format, "csv table or json summary")
      ->check(CLI::IsMember({"csv", "json"}));
}

void add_physical_flags(CLI::App* sub, Options& o, bool with_c, bool with_g) {
  sub->add_option("--m", o.m, "mass");
  sub->add_option("--omega", o.omega, "oscillator frequency");
  if (with_g) sub->add_option("--g", o.g, "singular-potential coupling");
  if (with_c) sub->add_option("--c", o.c_text, "speed of light (number or 'inf')");
  sub->add_option("--hbar", o.hbar, "reduced Planck constant");
}

void add_grid_flags(CLI::App* sub, Options& o) {
  sub->add_option("--rho-min", o.rho_min, "grid start");
  sub->add_option("--rho-max", o.rho_max, "grid end");
  sub->add_option("--points", o.points, "grid size");
  sub->add_flag("--log-grid", o.log_grid, "logarithmic grid spacing");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relativistic singular oscillator: spectrum, wavefunctions, verification"};
  app.require_subcommand(1);
  Options o;

  auto* sp = app.add_subcommand("spectrum", "energy levels and exponents over (n, l) ranges");
  add_physical_flags(sp, o, true, true);
  sp->add_option("--n", o.n_text, "radial quantum number range (N or LO..HI)");
  sp->add_option("--l", o.l_text, "orbital quantum number range (N or LO..HI)");
  add_output_flags(sp, o);

  auto* wf = app.add_subcommand("wavefunction", "radial wavefunction table on a rho grid");
  add_physical_flags(wf, o, true, true);
  wf->add_option("--n", o.n_single, "radial quantum number");
  wf->add_option("--l", o.l_single, "orbital quantum number");
  add_grid_flags(wf, o);
  add_output_flags(wf, o);

  auto* vf = app.add_subcommand("verify", "finite-difference equation residual checks");
  add_physical_flags(vf, o, true, true);
  vf->add_option("--n", o.n_text, "radial quantum number range");
  vf->add_option("--l", o.l_text, "orbital quantum number range");
  add_grid_flags(vf, o);
  vf->add_option("--tolerance", o.tolerance, "max relative residual for exit 0");
  add_output_flags(vf, o);

  auto* ort = app.add_subcommand("ortho", "orthonormality Gram matrix by quadrature");
  add_physical_flags(ort, o, true, true);
  ort->add_option("--l", o.l_single, "orbital quantum number");
  ort->add_option("--n-max", o.n_max, "largest radial quantum number");
  ort->add_option("--rho-max", o.ortho_rho_max, "integration cutoff (0 = automatic)");
  ort->add_option("--points", o.node_budget, "quadrature node budget");
  ort->add_flag("--fixed", o.fixed_quadrature, "single fixed-budget pass (no panel doubling)");
  ort->add_option("--tolerance", o.tolerance, "max Gram deviation for exit 0");
  add_output_flags(ort, o);

  auto* lim = app.add_subcommand("limits", "nonrelativistic limit sweeps over mu");
  add_physical_flags(lim, o, false, true);
  lim->add_option("--kind", o.kind, "energy gap or wavefunction sup deviation")
      ->check(CLI::IsMember({"energy", "wavefunction"}));
  lim->add_option("--n", o.n_single, "radial quantum number");
  lim->add_option("--l", o.l_single, "orbital quantum number");
  lim->add_option("--mu", o.mu_text, "comma-separated mu = mc^2/(hbar omega) values");
  lim->add_option("--rho-min", o.xi_min, "xi grid start (wavefunction kind)");
  lim->add_option("--rho-max", o.xi_max, "xi grid end (wavefunction kind)");
  lim->add_option("--points", o.xi_points, "xi grid size");
  lim->add_flag("--log-grid", o.log_grid, "logarithmic xi grid");
  add_output_flags(lim, o);

  auto* fig = app.add_subcommand("figure1", "ground-state energy vs coupling, c in {1, 4, inf}");
  fig->add_option("--m", o.m, "mass (must be 1)");
  fig->add_option("--omega", o.omega, "frequency (must be 1)");
  fig->add_option("--hbar", o.hbar, "action (must be 1)");
  fig->add_option("--g-min", o.g_min, "coupling sweep start");
  fig->add_option("--g-max", o.g_max, "coupling sweep end");
  fig->add_option("--points", o.fig_points, "coupling grid size");
  add_output_flags(fig, o);

  auto* pw = app.add_subcommand("planewave", "relativistic plane wave vs Euclidean limit");
  pw->add_option("--m", o.m, "mass");
  pw->add_option("--hbar", o.hbar, "reduced Planck constant");
  pw->add_option("--px", o.px, "momentum x");
  pw->add_option("--py", o.py, "momentum y");
  pw->add_option("--pz", o.pz, "momentum z");
  pw->add_option("--rx", o.rx, "position x");
  pw->add_option("--ry", o.ry, "position y");
  pw->add_option("--rz", o.rz, "position z");
  pw->add_option("--c-values", o.c_values_text, "comma-separated increasing c values");
  add_output_flags(pw, o);

  std::string active = "none";
  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      app.exit(e);
      return 2;
    }
    if (sp->parsed()) { active = "spectrum"; return cmd_spectrum(o); }
    if (wf->parsed()) { active = "wavefunction"; return cmd_wavefunction(o); }
    if (vf->parsed()) { active = "verify"; return cmd_verify(o); }
    if (ort->parsed()) { active = "ortho"; return cmd_ortho(o); }
    if (lim->parsed()) { active = "limits"; return cmd_limits(o); }
    if (fig->parsed()) { active = "figure1"; return cmd_figure1(o); }
    if (pw->parsed()) { active = "planewave"; return cmd_planewave(o); }
    return 2;
  } catch (const relosc::RegimeError& e) {
    std::cerr << json{{"command", active}, {"status", "regime_error"}, {"error", e.what()}}.dump()
              << "\n";
    return 3;
  } catch (const relosc::BranchError& e) {
    std::cerr << json{{"command", active}, {"status", "regime_error"}, {"error", e.what()}}.dump()
              << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << json{{"command", active}, {"status", "config_error"}, {"error", e.what()}}.dump()
              << "\n";
    return 2;
  }
}
