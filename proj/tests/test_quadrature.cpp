#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "relosc/log_complex.hpp"
#include "relosc/quadrature.hpp"

using namespace relosc;
namespace pi = std::numbers;

TEST_CASE("low-order nodes and weights match the closed forms") {
  const auto& n2 = gl_nodes(2);
  const auto& w2 = gl_weights(2);
  REQUIRE(n2.size() == 2);
  CHECK(n2[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(n2[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(w2[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(w2[1] == doctest::Approx(1.0).epsilon(1e-15));

  const auto& n5 = gl_nodes(5);
  const auto& w5 = gl_weights(5);
  CHECK(n5[2] == 0.0);  // odd order centers a node exactly at zero
  CHECK(n5[4] == doctest::Approx(0.9061798459386639928).epsilon(1e-15));
  CHECK(n5[3] == doctest::Approx(0.5384693101056830910).epsilon(1e-15));
  CHECK(w5[2] == doctest::Approx(128.0 / 225.0).epsilon(1e-15));
  CHECK(w5[4] == doctest::Approx(0.2369268850561890875).epsilon(1e-14));
}

TEST_CASE("nodes are symmetric and weights sum to the interval length") {
  for (int order : {3, 8, 24, 61}) {
    const auto& x = gl_nodes(order);
    const auto& w = gl_weights(order);
    REQUIRE((int)x.size() == order);
    double wsum = 0.0;
    for (int i = 0; i < order; ++i) {
      CHECK(x[i] == -x[order - 1 - i]);  // exact by construction
      CHECK(w[i] == w[order - 1 - i]);
      wsum += w[i];
    }
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
  }
  CHECK_THROWS_AS((void)gl_nodes(0), std::domain_error);
}

TEST_CASE("polynomial exactness up to degree 2n-1") {
  const auto& x = gl_nodes(6);
  const auto& w = gl_weights(6);
  for (int deg = 0; deg <= 11; ++deg) {
    double got = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) got += w[i] * std::pow(x[i], deg);
    const double want = (deg % 2 == 0) ? 2.0 / (deg + 1) : 0.0;
    CHECK(std::fabs(got - want) < 1e-14);
  }
}

TEST_CASE("composite integration reproduces known integrals") {
  const double gauss = integrate_composite(
      [](double t) { return std::exp(-t * t); }, -10.0, 10.0, 20, 24);
  CHECK(gauss == doctest::Approx(std::sqrt(pi::pi)).epsilon(1e-14));
  const Complex osc = integrate_composite(
      [](double t) { return std::polar(1.0, 3.0 * t); }, 0.0, 2.0, 8, 24);
  const Complex want = (std::polar(1.0, 6.0) - 1.0) / Complex(0.0, 3.0);
  CHECK(std::abs(osc - want) < 1e-14);
}

TEST_CASE("pairwise summation is immune to long cancellation chains") {
  // 1e5 copies of x sum to exactly 1e5 * x under pairwise grouping when x is
  // a power of two; also check a classic drift case against long-double sum.
  std::vector<double> v(100000, 0.1);
  long double ref = 0.0L;
  for (double t : v) ref += (long double)t;
  // sequential summation drifts ~1e-9 here; pairwise stays within a few ulp
  CHECK(std::fabs(pairwise_sum(v) - (double)ref) < 1e-11);
  std::vector<Complex> cv;
  for (int i = 0; i < 4096; ++i) cv.push_back(std::polar(1.0, 0.001 * i));
  std::complex<long double> cref = 0.0L;
  for (Complex t : cv) cref += std::complex<long double>(t);
  const Complex cwant((double)cref.real(), (double)cref.imag());
  CHECK(std::abs(pairwise_sum(cv) - cwant) < 1e-14 * std::abs(cwant));
}
