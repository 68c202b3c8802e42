#include "sharpbound/quadrature.hpp"

#include "sharpbound/error.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace sharpbound {

double GaussLegendreRule::integrate(const std::function<double(double)>& g, double a,
                                    double b) const {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * g(mid + half * nodes[i]);
  return half * sum;
}

namespace {

// P_n(x) and P_n'(x) from the three-term recurrence.
std::pair<double, double> legendre(unsigned n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (unsigned j = 2; j <= n; ++j) {
    const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
    p0 = p1;
    p1 = p2;
  }
  const double dp = n == 1 ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

}  // namespace

GaussLegendreRule gauss_legendre(unsigned points) {
  if (points == 0) throw Error(ErrorCode::InvalidArgument, "quadrature needs at least one point");

  GaussLegendreRule rule;
  rule.nodes.resize(points);
  rule.weights.resize(points);

  for (unsigned i = 0; i < (points + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(points, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    if (points % 2 == 1 && i == points / 2) x = 0.0;
    const double dp = legendre(points, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);

    rule.nodes[i] = -x;
    rule.nodes[points - 1 - i] = x;
    rule.weights[i] = rule.weights[points - 1 - i] = w;
  }
  return rule;
}

namespace {

double bisect_root(const std::function<double(double)>& g, double lo, double hi, double glo) {
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if ((gm < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double integrate_abs(const std::function<double(double)>& g, double a, double b,
                     const GaussLegendreRule& rule) {
  const std::size_t samples = rule.size() + 1;
  std::vector<double> breaks{a};

  double x_prev = a;
  double g_prev = g(a);
  for (std::size_t i = 1; i < samples; ++i) {
    const double x = (i + 1 == samples) ? b : a + (static_cast<double>(i) * (b - a)) / (samples - 1);
    const double gx = g(x);
    if (gx == 0.0 && i + 1 < samples) {
      breaks.push_back(x);
    } else if (g_prev != 0.0 && gx != 0.0 && (g_prev < 0.0) != (gx < 0.0)) {
      breaks.push_back(bisect_root(g, x_prev, x, g_prev));
    }
    x_prev = x;
    g_prev = gx;
  }
  breaks.push_back(b);

  double total = 0.0;
  const auto abs_g = [&](double x) { return std::abs(g(x)); };
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (breaks[i + 1] > breaks[i]) total += rule.integrate(abs_g, breaks[i], breaks[i + 1]);
  }
  return total;
}

}  // namespace sharpbound
