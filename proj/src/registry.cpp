#include "sharpbound/registry.hpp"

#include "sharpbound/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace sharpbound {

namespace {

std::vector<double> sine_critical_points(const Interval& domain) {
  // f''' = -cos vanishes at pi/2 + j*pi.
  std::vector<double> points;
  const double pi = std::numbers::pi;
  const auto first = static_cast<long>(std::ceil((domain.lo - pi / 2) / pi));
  for (long j = first;; ++j) {
    const double x = pi / 2 + static_cast<double>(j) * pi;
    if (x > domain.hi) break;
    if (x >= domain.lo) points.push_back(x);
  }
  return points;
}

std::vector<FunctionSpec> build_registry() {
  std::vector<FunctionSpec> specs;

  specs.push_back({"affine", "1+2x",
                   [](double x) { return 1.0 + 2.0 * x; },
                   [](double) { return 2.0; },
                   [](double) { return 0.0; },
                   {-10.0, 10.0}, CurvatureShape::Constant, {}});

  specs.push_back({"parabola", "x^2",
                   [](double x) { return x * x; },
                   [](double x) { return 2.0 * x; },
                   [](double) { return 2.0; },
                   {-10.0, 10.0}, CurvatureShape::Constant, {}});

  specs.push_back({"poly3", "x^3",
                   [](double x) { return x * x * x; },
                   [](double x) { return 3.0 * x * x; },
                   [](double x) { return 6.0 * x; },
                   {-10.0, 10.0}, CurvatureShape::Monotone, {}});

  specs.push_back({"bump", "x(1-x)",
                   [](double x) { return x * (1.0 - x); },
                   [](double x) { return 1.0 - 2.0 * x; },
                   [](double) { return -2.0; },
                   {-10.0, 10.0}, CurvatureShape::Constant, {}});

  const Interval sine_domain{-10.0, 10.0};
  specs.push_back({"sine", "sin(x)",
                   [](double x) { return std::sin(x); },
                   [](double x) { return std::cos(x); },
                   [](double x) { return -std::sin(x); },
                   sine_domain, CurvatureShape::PiecewiseMonotone,
                   sine_critical_points(sine_domain)});

  specs.push_back({"exp", "exp(x)",
                   [](double x) { return std::exp(x); },
                   [](double x) { return std::exp(x); },
                   [](double x) { return std::exp(x); },
                   {-5.0, 5.0}, CurvatureShape::Monotone, {}});

  // f'' has interior extrema at 0 and +-1/5; left as General so the sampled
  // path stays exercised by a registry member.
  specs.push_back({"runge", "1/(1+25x^2)",
                   [](double x) { return 1.0 / (1.0 + 25.0 * x * x); },
                   [](double x) {
                     const double d = 1.0 + 25.0 * x * x;
                     return -50.0 * x / (d * d);
                   },
                   [](double x) {
                     const double d = 1.0 + 25.0 * x * x;
                     return 50.0 * (75.0 * x * x - 1.0) / (d * d * d);
                   },
                   {-1.0, 1.0}, CurvatureShape::General, {}});

  return specs;
}

const std::vector<FunctionSpec>& registry() {
  static const std::vector<FunctionSpec> specs = build_registry();
  return specs;
}

}  // namespace

double DerivativeBounds::sup_abs() const { return std::max(std::abs(m2), std::abs(M2)); }

std::vector<std::string> function_ids() {
  std::vector<std::string> ids;
  for (const auto& spec : registry()) ids.push_back(spec.id);
  return ids;
}

const FunctionSpec& lookup(std::string_view id) {
  const auto& specs = registry();
  const auto it = std::find_if(specs.begin(), specs.end(),
                               [&](const FunctionSpec& s) { return s.id == id; });
  if (it != specs.end()) return *it;

  std::ostringstream msg;
  msg << "unknown function: " << id << " (valid:";
  for (const auto& spec : specs) msg << ' ' << spec.id;
  msg << ')';
  throw Error(ErrorCode::UnknownFunction, msg.str());
}

void check_interval(const FunctionSpec& spec, double a, double b) {
  if (!(a < b)) {
    std::ostringstream msg;
    msg << "degenerate interval [" << a << ", " << b << "]";
    throw Error(ErrorCode::DegenerateInterval, msg.str());
  }
  if (!spec.domain.contains(a, b)) {
    std::ostringstream msg;
    msg << "domain violation: [" << a << ", " << b << "] not inside [" << spec.domain.lo
        << ", " << spec.domain.hi << "] for " << spec.id;
    throw Error(ErrorCode::DomainViolation, msg.str());
  }
}

DerivativeBounds second_derivative_bounds(const FunctionSpec& spec, double a, double b,
                                          int scan_points) {
  check_interval(spec, a, b);

  switch (spec.shape) {
    case CurvatureShape::Constant: {
      const double v = spec.f_second(a);
      return {v, v, true};
    }
    case CurvatureShape::Monotone: {
      const double fa = spec.f_second(a);
      const double fb = spec.f_second(b);
      return {std::min(fa, fb), std::max(fa, fb), true};
    }
    case CurvatureShape::PiecewiseMonotone: {
      double lo = std::min(spec.f_second(a), spec.f_second(b));
      double hi = std::max(spec.f_second(a), spec.f_second(b));
      for (double c : spec.critical_points) {
        if (c <= a || c >= b) continue;
        const double v = spec.f_second(c);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      return {lo, hi, true};
    }
    case CurvatureShape::General:
      break;
  }

  if (scan_points < 2) throw Error(ErrorCode::InvalidArgument, "scan_points must be >= 2");
  double lo = spec.f_second(a);
  double hi = lo;
  const double width = b - a;
  const int last = scan_points - 1;
  for (int i = 1; i <= last; ++i) {
    const double t = (i == last) ? b : a + (static_cast<double>(i) * width) / last;
    const double v = spec.f_second(t);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi, false};
}

DerivativeBounds widen_for_safety(const DerivativeBounds& bounds) {
  if (bounds.exact) return bounds;
  const double pad = 0.01 * std::max(bounds.span(), bounds.sup_abs());
  return {bounds.m2 - pad, bounds.M2 + pad, false};
}

}  // namespace sharpbound
