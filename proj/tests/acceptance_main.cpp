// Release gate.  Each numbered check prints exactly one [PASS]/[FAIL] line;
// the process exits nonzero if any fail.  Checks 7 and 10 drive the
// command-line binary (path in argv[1]); everything else calls the library.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "relosc/cdhahn.hpp"
#include "relosc/nonrel.hpp"
#include "relosc/oscillator.hpp"
#include "relosc/plane_wave.hpp"
#include "relosc/verification.hpp"

using namespace relosc;

namespace {

int g_failures = 0;

void report(int number, bool ok, const std::string& label, const std::string& detail) {
  std::printf("[%s] %2d %s — %s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
              detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

const double kOmega0[] = {1.0 / 16.0, 0.25, 1.0};
const double kG0[] = {0.0, 0.25, 1.0};

// ------------------------------------------------------------------ 1 & 2

void equation_residuals() {
  const auto grid = make_grid(0.1, 30.0, 200, true);
  const auto t0 = std::chrono::steady_clock::now();
  double worst_radial = 0.0, worst_omega = 0.0, worst_omega_n0 = 0.0;
  for (double w0 : kOmega0) {
    for (double g0 : kG0) {
      const auto d = DimensionlessParams::make(w0, g0);
      for (int l = 0; l <= 4; ++l) {
        if (classify_regime(d, l) != SpectrumRegime::Real) continue;
        for (int n = 0; n <= 5; ++n) {
          const double rr =
              radial_equation_residual(d, {n, l}, grid).max_relative_residual;
          worst_radial = std::max(worst_radial, rr);
          const double om = omega_equation_residual(d, {n, l}, grid).max_relative_residual;
          worst_omega = std::max(worst_omega, om);
          if (n == 0) worst_omega_n0 = std::max(worst_omega_n0, om);
        }
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(1, worst_radial < 1e-8 && seconds < 10.0,
         "shifted-argument radial equation residual",
         "max rel " + fmt(worst_radial) + " over n<=5 l<=4 (real-spectrum sets), " +
             fmt(seconds) + " s");
  report(2, worst_omega < 1e-10 && worst_omega_n0 < 1e-13,
         "auxiliary three-term equation residual",
         "max rel " + fmt(worst_omega) + ", n=0 max " + fmt(worst_omega_n0));
}

// ---------------------------------------------------------------------- 3

void orthonormality() {
  // The adaptive scheme doubles panel counts until entries stabilize; ask for
  // the fixed scheme at two budgets to show the convergence explicitly, then
  // score the adaptive result.
  bool ok = true;
  std::string detail;
  struct Case {
    double w0, g0;
    int l;
  } cases[] = {{1.0, 0.0, 0}, {0.25, 0.25, 2}};
  for (const auto& c : cases) {
    const auto d = DimensionlessParams::make(c.w0, c.g0);
    QuadratureSpec coarse;
    coarse.scheme = QuadratureScheme::FixedComposite;
    coarse.node_count = 48;
    QuadratureSpec fine = coarse;
    fine.node_count = 96;
    const double dev_coarse =
        orthonormality_matrix(d, c.l, 4, coarse).max_deviation_from_identity();
    const double dev_fine =
        orthonormality_matrix(d, c.l, 4, fine).max_deviation_from_identity();
    const double dev = orthonormality_matrix(d, c.l, 4, {}).max_deviation_from_identity();
    const bool converged = dev_fine <= dev_coarse * 1.000001 && dev < 1e-8;
    ok = ok && converged;
    detail += "(" + fmt(c.w0) + "," + fmt(c.g0) + ",l=" + std::to_string(c.l) + ") " +
              fmt(dev_coarse) + " -> " + fmt(dev_fine) + " -> " + fmt(dev) + "  ";
  }
  report(3, ok, "orthonormality via panel-doubling quadrature, n <= 4", detail);
}

// ---------------------------------------------------------------------- 4

void spectrum_values() {
  const auto d = DimensionlessParams::make(1.0, 0.0);
  const double e00 = energy(d, {0, 0}, 1.0).energy.real();
  const double gap = std::fabs(e00 - (1.5 + 0.5 * std::sqrt(5.0)));
  bool spacing = true;
  for (double w0 : kOmega0) {
    for (double g0 : kG0) {
      const auto dd = DimensionlessParams::make(w0, g0);
      for (int l = 0; l <= 4; ++l) {
        if (classify_regime(dd, l) == SpectrumRegime::Collapse) continue;
        for (int n = 0; n <= 4; ++n) {
          // mc2 = 1/omega0 makes hbar omega exactly 1; spacing must be 2.
          const double lo = energy(dd, {n, l}, 1.0 / w0).energy.real();
          const double hi = energy(dd, {n + 1, l}, 1.0 / w0).energy.real();
          if (hi - lo != 2.0) spacing = false;
        }
      }
    }
  }
  report(4, gap < 1e-12 && spacing, "ground level and exact 2 hbar omega spacing",
         "|E00 - 3/2 - sqrt(5)/2| = " + fmt(gap) + ", spacing exact across sweep: " +
             (spacing ? "yes" : "no"));
}

// ---------------------------------------------------------------------- 5

void energy_limit() {
  bool ok = true;
  std::string detail;
  struct Case {
    int n, l;
    double g;
  } cases[] = {{0, 0, 0.0}, {1, 2, 0.25}};
  for (const auto& c : cases) {
    const NonRelParams p{1.0, 1.0, c.g, 1.0};
    const auto sweep = energy_limit_sweep(p, {c.n, c.l}, {1e2, 1e3, 1e4});
    const bool mono = sweep[0].value > sweep[1].value && sweep[1].value > sweep[2].value;
    const double slope = loglog_slope(sweep);
    ok = ok && mono && slope > -1.3 && slope < -0.7;
    detail += "(n=" + std::to_string(c.n) + ",l=" + std::to_string(c.l) + ",g=" + fmt(c.g) +
              ") slope " + fmt(slope) + "  ";
  }
  const bool exact = nonrel_energy(NonRelParams{}, {0, 0}) == 1.5;
  ok = ok && exact;
  report(5, ok, "energy gap to the limit model closes with slope near -1",
         detail + (exact ? "E(0,0,g=0) = 3/2 exact" : "E(0,0,g=0) NOT exact"));
}

// ---------------------------------------------------------------------- 6

void wavefunction_limit() {
  const auto xi = make_grid(0.05, 5.0, 200, false);
  bool ok = true;
  std::string detail;
  for (int n = 0; n <= 1; ++n) {
    for (int l = 0; l <= 1; ++l) {
      const auto sweep = wavefunction_limit_sweep(NonRelParams{}, {n, l}, {1e2, 1e4}, xi);
      const double ratio = sweep[0].value / sweep[1].value;
      ok = ok && ratio >= 3.0;
      detail += "(n=" + std::to_string(n) + ",l=" + std::to_string(l) + ") x" +
                fmt(ratio) + "  ";
    }
  }
  report(6, ok, "wavefunction sup deviation drops >= 3x from mu=1e2 to 1e4", detail);
}

// ---------------------------------------------------------------------- 7

std::string g_binary;

int run_cli(const std::string& args, const std::string& out_path) {
  const std::string cmd = g_binary + " " + args + " >" + out_path + " 2>acceptance_err.tmp";
  const int raw = std::system(cmd.c_str());
  return (raw >= 0 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
}

void collapse_boundary() {
  const double gc = collapse_threshold_g0(1.0, 0);
  const bool exact = gc == -5.0 / 32.0;
  const bool flips =
      classify_regime(DimensionlessParams::make(1.0, gc - 1e-10), 0) ==
          SpectrumRegime::Collapse &&
      classify_regime(DimensionlessParams::make(1.0, gc + 1e-10), 0) !=
          SpectrumRegime::Collapse;

  // Sweep data: for every (c, l) series the first coupling with Im E != 0,
  // walking g downward, must sit within one step of the predicted threshold.
  bool onsets_ok = run_cli("figure1 --points 401", "acceptance_fig1.csv") == 0;
  std::ifstream f("acceptance_fig1.csv");
  std::string line;
  std::getline(f, line);  // header
  struct Key {
    std::string c;
    int l;
  };
  std::vector<Key> keys;
  std::vector<double> onset;  // largest g with Im != 0 per series
  while (std::getline(f, line)) {
    std::istringstream cs(line);
    std::string c_cell, l_cell, g_cell, re_cell, im_cell;
    std::getline(cs, c_cell, ',');
    std::getline(cs, l_cell, ',');
    std::getline(cs, g_cell, ',');
    std::getline(cs, re_cell, ',');
    std::getline(cs, im_cell, ',');
    std::size_t idx = 0;
    for (; idx < keys.size(); ++idx) {
      if (keys[idx].c == c_cell && keys[idx].l == std::stoi(l_cell)) break;
    }
    if (idx == keys.size()) {
      keys.push_back({c_cell, std::stoi(l_cell)});
      onset.push_back(std::numeric_limits<double>::quiet_NaN());
    }
    if (std::stod(im_cell) != 0.0) {
      const double g = std::stod(g_cell);
      if (std::isnan(onset[idx]) || g > onset[idx]) onset[idx] = g;
    }
  }
  const double step = 2.0 / 400.0;
  std::string detail = "g_crit exact: " + std::string(exact ? "yes" : "no") + ", flip: " +
                       (flips ? "yes" : "no") + ", onsets:";
  for (std::size_t i = 0; i < keys.size(); ++i) {
    double want;
    if (keys[i].c == "inf") {
      want = nonrel_collapse_threshold_g(NonRelParams{}, keys[i].l);
    } else {
      const double c = std::stod(keys[i].c);
      want = collapse_threshold(PhysicalParams{1.0, 1.0, c, 0.0, 1.0}, keys[i].l);
    }
    if (want < -1.0) {
      // threshold below the sweep window: the series must stay real
      if (!std::isnan(onset[i])) onsets_ok = false;
      continue;
    }
    // onset = largest complex g; the first real point is one step above it
    const bool near = !std::isnan(onset[i]) && onset[i] <= want + step * 1.0001 &&
                      onset[i] >= want - step * 1.0001;
    if (!near) onsets_ok = false;
    detail += " (c=" + keys[i].c + ",l=" + std::to_string(keys[i].l) + ") " +
              fmt(onset[i]) + "/" + fmt(want);
  }
  std::remove("acceptance_fig1.csv");
  std::remove("acceptance_err.tmp");
  report(7, exact && flips && onsets_ok,
         "collapse threshold, regime flip, and sweep onsets", detail);
}

// ---------------------------------------------------------------------- 8

void polynomial_cross_validation() {
  const CdhParams sets[] = {
      {Complex(1.0), Complex(2.0), Complex(0.5)},
      {Complex(1.3), Complex(45.0), Complex(0.5)},
      {Complex(2.618), Complex(3.618), Complex(0.5)},
  };
  double worst_pair = 0.0, worst_perm = 0.0;
  for (const auto& p : sets) {
    const CdhParams perms[] = {{p.b, p.a, p.c}, {p.c, p.b, p.a}, {p.a, p.c, p.b},
                               {p.b, p.c, p.a}, {p.c, p.a, p.b}};
    for (int n = 0; n <= 12; ++n) {
      for (double x : {0.0, 0.5, 1.7, 4.2, 9.0, 14.0, 20.0}) {
        const Complex xx(x * x);
        const Complex s = cdh_sum(n, xx, p);
        const Complex r = cdh_recurrence(n, xx, p);
        const double scale = std::max({std::abs(s), std::abs(r), 1.0});
        worst_pair = std::max(worst_pair, std::abs(s - r) / scale);
        for (const auto& q : perms) {
          worst_perm =
              std::max(worst_perm, std::abs(cdh_sum(n, xx, q) - s) / scale);
        }
      }
    }
  }
  report(8, worst_pair < 1e-10 && worst_perm < 1e-10,
         "polynomial sum vs recurrence and full parameter symmetry",
         "cross-method " + fmt(worst_pair) + ", permutation " + fmt(worst_perm));
}

// ---------------------------------------------------------------------- 9

void plane_wave_limit() {
  const Vec3 r{0.7, 0.2, -0.5}, p{0.3, -0.4, 1.2};
  const auto pts = euclidean_limit_check(r, p, 1.0, 1.0, {10.0, 100.0, 1000.0});
  const bool mono = pts[0].deviation > pts[1].deviation &&
                    pts[1].deviation > pts[2].deviation;
  const auto rest = euclidean_limit_check(r, {0.0, 0.0, 0.0}, 1.0, 1.0, {10.0, 100.0});
  const bool zero = rest[0].deviation == 0.0 && rest[1].deviation == 0.0;
  report(9, mono && zero, "plane wave approaches the flat-space exponential",
         fmt(pts[0].deviation) + " > " + fmt(pts[1].deviation) + " > " +
             fmt(pts[2].deviation) + ", rest deviation identically 0: " +
             (zero ? "yes" : "no"));
}

// --------------------------------------------------------------------- 10

void determinism() {
  const char* cmds[] = {
      "spectrum --omega 0.0625 --g 1 --n 0..5 --l 0..4",
      "verify --n 0..2 --l 0..2 --points 50 --log-grid",
      "figure1 --points 101",
      "planewave --px 0.3 --py -0.4 --pz 1.2",
  };
  bool ok = true;
  for (const char* c : cmds) {
    const int ca = run_cli(c, "acceptance_a.tmp");
    const int cb = run_cli(c, "acceptance_b.tmp");
    std::ifstream fa("acceptance_a.tmp", std::ios::binary);
    std::ifstream fb("acceptance_b.tmp", std::ios::binary);
    std::ostringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    if (ca != cb || sa.str().empty() || sa.str() != sb.str()) ok = false;
  }
  std::remove("acceptance_a.tmp");
  std::remove("acceptance_b.tmp");
  std::remove("acceptance_err.tmp");
  report(10, ok, "byte-identical tables on repeated runs", "4 commands, 2 runs each");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-cli>\n", argv[0]);
    return 2;
  }
  g_binary = argv[1];
  equation_residuals();
  orthonormality();
  spectrum_values();
  energy_limit();
  wavefunction_limit();
  collapse_boundary();
  polynomial_cross_validation();
  plane_wave_limit();
  determinism();
  std::printf("%s\n", g_failures == 0 ? "acceptance: all checks passed"
                                      : "acceptance: FAILURES present");
  return g_failures == 0 ? 0 : 1;
}
