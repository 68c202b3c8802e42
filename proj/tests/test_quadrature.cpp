#include "sharpbound/error.hpp"
#include "sharpbound/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace sharpbound;

TEST_CASE("gauss-legendre rules integrate polynomials of degree 2n-1 exactly") {
  for (unsigned n : {1u, 2u, 3u, 5u, 8u, 16u, 32u, 64u}) {
    const auto rule = gauss_legendre(n);
    REQUIRE(rule.size() == n);
    double wsum = 0.0;
    for (double w : rule.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    for (unsigned deg = 0; deg <= 2 * n - 1 && deg <= 20; ++deg) {
      const double exact = (deg % 2 == 1) ? 0.0 : 2.0 / (deg + 1);
      const double got = rule.integrate([deg](double x) { return std::pow(x, deg); }, -1.0, 1.0);
      CAPTURE(n);
      CAPTURE(deg);
      CHECK(std::abs(got - exact) <= 1e-14);
    }
  }
}

TEST_CASE("nodes are symmetric and increasing") {
  const auto rule = gauss_legendre(9);
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[8 - i]));
    if (i > 0) CHECK(rule.nodes[i - 1] < rule.nodes[i]);
  }
  CHECK(rule.nodes[4] == 0.0);
  CHECK_THROWS_AS(gauss_legendre(0), Error);
}

TEST_CASE("absolute-value integrals with interior sign changes") {
  const auto rule = gauss_legendre(32);
  // |x - 0.3| on [0, 1]: 0.045 + 0.245
  CHECK(integrate_abs([](double x) { return x - 0.3; }, 0.0, 1.0, rule) ==
        doctest::Approx(0.29).epsilon(1e-15));
  // |sin| over [0, 3 pi] = 6
  CHECK(integrate_abs([](double x) { return std::sin(x); }, 0.0, 3 * std::numbers::pi, rule) ==
        doctest::Approx(6.0).epsilon(1e-13));
  // |cos| with a root exactly on a scan sample
  CHECK(integrate_abs([](double x) { return std::cos(x); }, 0.0, std::numbers::pi, rule) ==
        doctest::Approx(2.0).epsilon(1e-14));
  // sign-definite integrand is untouched
  CHECK(integrate_abs([](double x) { return std::exp(x); }, 0.0, 1.0, rule) ==
        doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-15));
}
