#include <doctest.h>

#include <cmath>

#include "relosc/errors.hpp"
#include "relosc/nonrel.hpp"
#include "relosc/quadrature.hpp"
#include "relosc/verification.hpp"

using namespace relosc;

TEST_CASE("limit exponent and energies at benchmark couplings") {
  const NonRelParams free_p;
  CHECK(free_p.limit_exponent_s(0) == doctest::Approx(0.0));
  CHECK(free_p.limit_exponent_s(1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(nonrel_energy(free_p, {0, 0}) == 1.5);  // exact: 2n + 2s + 3/2 at s = 0
  CHECK(nonrel_energy(free_p, {3, 1}) == doctest::Approx(8.5).epsilon(1e-15));
  const NonRelParams attractive{1.0, 1.0, -0.1, 1.0};
  // s = (sqrt(1 + 8 g m / hbar^2) - 1)/4 with g = -0.1
  CHECK(attractive.limit_exponent_s(0) ==
        doctest::Approx((std::sqrt(0.2) - 1.0) / 4.0).epsilon(1e-15));
  // scaling in physical units: E multiplies by hbar omega
  const NonRelParams scaled{2.0, 3.0, 0.0, 5.0};
  CHECK(nonrel_energy(scaled, {0, 0}) == doctest::Approx(1.5 * 15.0).epsilon(1e-15));
}

TEST_CASE("below critical attraction the real energy does not exist") {
  const NonRelParams deep{1.0, 1.0, -1.0, 1.0};
  CHECK_THROWS_AS((void)nonrel_energy(deep, {0, 0}), BranchError);
  CHECK_THROWS_AS((void)deep.limit_exponent_s(0), BranchError);
  const Complex e = nonrel_energy_complex(deep, {0, 0});
  CHECK(e.imag() > 0.0);  // principal branch
  CHECK(e.real() == doctest::Approx(1.0).epsilon(1e-15));  // 3/2 + 2 Re s, Re s = -1/4
  // threshold: g_crit = -hbar^2 (2l+1)^2 / (8 m)
  CHECK(nonrel_collapse_threshold_g(NonRelParams{}, 0) == -0.125);
  CHECK(nonrel_collapse_threshold_g(NonRelParams{2.0, 1.0, 0.0, 3.0}, 1) ==
        doctest::Approx(-9.0 * 9.0 / 16.0).epsilon(1e-15));
  CHECK(nonrel_energy_complex(NonRelParams{1.0, 1.0, -0.125, 1.0}, {0, 0}).imag() == 0.0);
}

TEST_CASE("associated Laguerre evaluation against closed forms") {
  CHECK(laguerre(0, 0.5, 3.0) == 1.0);
  CHECK(laguerre(1, 1.5, 2.0) == doctest::Approx(0.5).epsilon(1e-15));  // 1 + a - x
  CHECK(laguerre(2, 0.5, 1.0) == doctest::Approx(-0.125).epsilon(1e-14));
  // Laguerre differential recurrence spot check at higher degree via the
  // three-term identity: (n+1) L_{n+1} = (2n+1+a-x) L_n - (n+a) L_{n-1}
  const double a = 0.75, x = 2.2;
  for (int n = 1; n <= 10; ++n) {
    const double lhs = (n + 1.0) * laguerre(n + 1, a, x);
    const double rhs = (2.0 * n + 1.0 + a - x) * laguerre(n, a, x) -
                       (n + a) * laguerre(n - 1, a, x);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
  }
}

TEST_CASE("limit-model radial wavefunction is unit-normalized with a zero at the origin") {
  const NonRelParams p;
  CHECK(nonrel_radial_wavefunction(p, {1, 1}, 0.0) == 0.0);
  for (QuantumNumbers q : {QuantumNumbers{0, 0}, QuantumNumbers{2, 1}}) {
    const double norm = integrate_composite(
        [&](double xi) {
          const double r = nonrel_radial_wavefunction(p, q, xi);
          return r * r;
        },
        0.0, 12.0, 24, 24);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("energy gap to the limit model closes like 1/mu") {
  const NonRelParams p;
  const auto sweep = energy_limit_sweep(p, {0, 0}, {1e2, 1e3, 1e4});
  REQUIRE(sweep.size() == 3);
  CHECK(sweep[0].value > sweep[1].value);
  CHECK(sweep[1].value > sweep[2].value);
  const double slope = loglog_slope(sweep);
  CHECK(slope > -1.3);
  CHECK(slope < -0.7);
  const NonRelParams coupled{1.0, 1.0, 0.25, 1.0};
  const auto sweep2 = energy_limit_sweep(coupled, {1, 2}, {1e2, 1e3, 1e4});
  CHECK(loglog_slope(sweep2) == doctest::Approx(-1.0).epsilon(0.05));
}

TEST_CASE("wavefunction sup deviation from the limit model shrinks with mu") {
  const NonRelParams p;
  const auto xi = make_grid(0.05, 5.0, 120, false);
  for (int n = 0; n <= 1; ++n) {
    for (int l = 0; l <= 1; ++l) {
      const auto sweep = wavefunction_limit_sweep(p, {n, l}, {1e2, 1e4}, xi);
      REQUIRE(sweep.size() == 2);
      CHECK(sweep[0].value >= 3.0 * sweep[1].value);
    }
  }
}

TEST_CASE("log-log slope helper on an exact power law") {
  std::vector<SweepPoint> pts = {{10.0, 5.0}, {100.0, 0.5}, {1000.0, 0.05}};
  CHECK(loglog_slope(pts) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK_THROWS_AS((void)loglog_slope({{10.0, 1.0}}), std::domain_error);
}
