#include "oracles.hpp"

#include "sharpbound/error.hpp"
#include "sharpbound/registry.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

using namespace sharpbound;

TEST_CASE("lookup returns the registered closed forms") {
  const auto& poly3 = lookup("poly3");
  CHECK(poly3.f(2.0) == 8.0);
  CHECK(poly3.f_second(2.0) == 12.0);

  const auto& parabola = lookup("parabola");
  for (double x : {-3.0, 0.0, 0.7}) CHECK(parabola.f_second(x) == 2.0);

  for (const char* id : {"parabola", "poly3", "bump", "sine", "exp", "runge", "affine"})
    CHECK_NOTHROW(lookup(id));
}

TEST_CASE("lookup is a pure function of the id") {
  CHECK(&lookup("sine") == &lookup("sine"));
  CHECK(lookup("exp").f(0.3) == lookup("exp").f(0.3));
}

TEST_CASE("unknown id lists the registry") {
  try {
    lookup("nosuch");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownFunction);
    const std::string msg = e.what();
    CHECK(msg.find("nosuch") != std::string::npos);
    for (const auto& id : function_ids()) CHECK(msg.find(id) != std::string::npos);
  }
}

TEST_CASE("closed-form derivatives agree with central differences") {
  const double step = 1e-5;
  for (const auto& id : function_ids()) {
    const auto& s = lookup(id);
    CAPTURE(id);
    const double lo = s.domain.lo + 0.01;
    const double hi = s.domain.hi - 0.01;
    for (int i = 0; i <= 40; ++i) {
      const double x = lo + (hi - lo) * i / 40.0;
      const double d1 = oracle::central_difference(s.f, x, step);
      const double d2 = oracle::central_difference(s.f_prime, x, step);
      CHECK(std::abs(d1 - s.f_prime(x)) <= 1e-6 * (1.0 + std::abs(s.f_prime(x))));
      CHECK(std::abs(d2 - s.f_second(x)) <= 1e-6 * (1.0 + std::abs(s.f_second(x))));
    }
  }
}

TEST_CASE("second derivative bounds: worked cases") {
  const auto cubic = second_derivative_bounds(lookup("poly3"), 0.0, 1.0);
  CHECK(cubic.m2 == 0.0);
  CHECK(cubic.M2 == 6.0);
  CHECK(cubic.exact);

  const auto parabola = second_derivative_bounds(lookup("parabola"), -5.0, 5.0);
  CHECK(parabola.m2 == 2.0);
  CHECK(parabola.M2 == 2.0);
  CHECK(parabola.exact);

  const auto sine = second_derivative_bounds(lookup("sine"), 0.0, std::numbers::pi);
  CHECK(sine.exact);
  CHECK(sine.m2 == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(sine.M2 == doctest::Approx(0.0).epsilon(1e-15));
  const auto scan = oracle::scan_range(lookup("sine").f_second, 0.0, std::numbers::pi, 100001);
  CHECK(std::abs(scan.first - sine.m2) < 1e-9);
  CHECK(std::abs(scan.second - sine.M2) < 1e-9);
}

TEST_CASE("exact bounds enclose a dense scan on many subintervals") {
  for (const auto& id : function_ids()) {
    const auto& s = lookup(id);
    if (s.shape == CurvatureShape::General) continue;
    CAPTURE(id);
    const double lo = std::max(s.domain.lo, -4.0);
    const double hi = std::min(s.domain.hi, 4.0);
    for (int i = 0; i < 12; ++i) {
      for (int j = i + 1; j <= 12; ++j) {
        const double a = lo + (hi - lo) * i / 12.0;
        const double b = lo + (hi - lo) * j / 12.0;
        const auto bounds = second_derivative_bounds(s, a, b);
        REQUIRE(bounds.exact);
        CHECK(bounds.m2 <= bounds.M2);
        const auto [smin, smax] = oracle::scan_range(s.f_second, a, b, 2001);
        CHECK(smin >= bounds.m2 - 1e-12);
        CHECK(smax <= bounds.M2 + 1e-12);
      }
    }
  }
}

TEST_CASE("sampled bounds are flagged and close to the true extrema") {
  // f'' = 50 (75x^2 - 1) / (1 + 25x^2)^3 has its minimum -50 at 0; f''' vanishes
  // at x = +-1/5, where f'' reaches its maximum 12.5.
  const auto& runge = lookup("runge");
  const auto b = second_derivative_bounds(runge, -1.0, 1.0);
  CHECK_FALSE(b.exact);
  CHECK(b.m2 == doctest::Approx(-50.0).epsilon(1e-12));
  CHECK(b.M2 == doctest::Approx(12.5).epsilon(1e-6));
  CHECK(runge.f_second(0.2) == doctest::Approx(12.5).epsilon(1e-14));

  // [0, 1]: minimum at 0, maximum of f'' at x = 1/5 where f''' vanishes.
  const auto half = second_derivative_bounds(runge, 0.0, 1.0);
  CHECK(half.M2 == doctest::Approx(runge.f_second(0.2)).epsilon(1e-6));
  CHECK(half.M2 <= runge.f_second(0.2));
}

TEST_CASE("safe mode widens only sampled bounds") {
  const auto exact = second_derivative_bounds(lookup("poly3"), 0.0, 1.0);
  const auto same = widen_for_safety(exact);
  CHECK(same.m2 == exact.m2);
  CHECK(same.M2 == exact.M2);

  const auto sampled = second_derivative_bounds(lookup("runge"), 0.0, 1.0);
  const auto wide = widen_for_safety(sampled);
  const double pad = 0.01 * std::max(sampled.span(), sampled.sup_abs());
  CHECK(wide.m2 == doctest::Approx(sampled.m2 - pad));
  CHECK(wide.M2 == doctest::Approx(sampled.M2 + pad));
  CHECK_FALSE(wide.exact);
}

TEST_CASE("interval errors") {
  const auto& s = lookup("exp");
  try {
    second_derivative_bounds(s, 1.0, 1.0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateInterval);
  }
  try {
    second_derivative_bounds(s, 0.0, 6.0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainViolation);
  }
}
