#pragma once

#include <functional>
#include <vector>

namespace sharpbound {

/// Gauss-Legendre rule on the reference interval [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  /// Integrates g over [a, b] with the rule mapped affinely.
  double integrate(const std::function<double(double)>& g, double a, double b) const;
};

/// Nodes by Newton iteration on the three-term Legendre recurrence, seeded
/// with the Tricomi approximation. Exact for polynomials of degree 2n - 1.
GaussLegendreRule gauss_legendre(unsigned points);

/// Integral of |g| over [a, b]. The interval is first scanned at
/// `rule.size() + 1` equispaced samples; every bracketed sign change is
/// located by bisection and |g| is integrated with the rule on each
/// sign-definite piece, so the kink of |g| never sits inside a GL panel.
double integrate_abs(const std::function<double(double)>& g, double a, double b,
                     const GaussLegendreRule& rule);

}  // namespace sharpbound
