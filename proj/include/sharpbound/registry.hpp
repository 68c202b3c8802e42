#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace sharpbound {

using RealFn = std::function<double(double)>;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double a, double b) const { return lo <= a && b <= hi; }
};

/// How the second derivative behaves on the function's domain. This decides
/// whether second_derivative_bounds can answer analytically.
enum class CurvatureShape {
  Constant,           // f'' constant: bounds are f''(a)
  Monotone,           // f'' monotone: extrema at the endpoints
  PiecewiseMonotone,  // f'' monotone between the listed critical points
  General,            // no metadata, bounds are sampled
};

/// An analytic test function with closed-form first and second derivatives.
struct FunctionSpec {
  std::string id;
  std::string formula;
  RealFn f;
  RealFn f_prime;
  RealFn f_second;
  Interval domain;
  CurvatureShape shape = CurvatureShape::General;
  // Zeros of f''' inside the domain, ascending. Only read for PiecewiseMonotone.
  std::vector<double> critical_points;
};

struct DerivativeBounds {
  double m2 = 0.0;
  double M2 = 0.0;
  bool exact = false;

  double span() const { return M2 - m2; }
  /// ||f''||_inf implied by the bounds.
  double sup_abs() const;
};

inline constexpr int kDefaultScanPoints = 10001;

/// Registered function ids in registration order.
std::vector<std::string> function_ids();

/// Throws Error(UnknownFunction) listing the valid ids.
const FunctionSpec& lookup(std::string_view id);

DerivativeBounds second_derivative_bounds(const FunctionSpec& spec, double a, double b,
                                          int scan_points = kDefaultScanPoints);

/// Safe mode: sampled bounds are widened by 1% of max(M2 - m2, ||f''||_inf).
/// Exact bounds pass through untouched.
DerivativeBounds widen_for_safety(const DerivativeBounds& bounds);

/// Throws DegenerateInterval for a >= b and DomainViolation when [a, b] is not
/// inside the spec's domain.
void check_interval(const FunctionSpec& spec, double a, double b);

}  // namespace sharpbound
