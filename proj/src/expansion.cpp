#include "sharpbound/expansion.hpp"

#include "sharpbound/error.hpp"

#include <algorithm>
#include <cmath>

namespace sharpbound {

void ExpansionConfig::validate() const {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  if (!(a < b)) throw Error(ErrorCode::DegenerateInterval, "expansion requires a < b");
}

std::string_view to_string(ExpansionMethod method) {
  return method == ExpansionMethod::Classical ? "classical" : "taylorlike";
}

bool ExpansionReport::within_bound(double slack) const {
  return std::abs(epsilon) <= epsilon_bound + slack * (1.0 + std::abs(epsilon_bound));
}

std::vector<double> weights(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  std::vector<double> w(n + 1, 1.0 / n);
  w.front() = w.back() = 1.0 / (2.0 * n);
  return w;
}

double node(const ExpansionConfig& cfg, unsigned k) {
  if (k >= cfg.n) return cfg.b;
  return cfg.a + (static_cast<double>(k) * (cfg.b - cfg.a)) / cfg.n;
}

double taylor_like_approx(const FunctionSpec& spec, const ExpansionConfig& cfg) {
  cfg.validate();
  check_interval(spec, cfg.a, cfg.b);
  const auto w = weights(cfg.n);
  // Neumaier summation keeps quadratics exact to rounding for large n.
  double sum = 0.0;
  double carry = 0.0;
  for (unsigned k = 0; k <= cfg.n; ++k) {
    const double term = w[k] * spec.f_prime(node(cfg, k));
    const double t = sum + term;
    carry += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return spec.f(cfg.a) + (cfg.b - cfg.a) * (sum + carry);
}

double taylor_classical_approx(const FunctionSpec& spec, const ExpansionConfig& cfg) {
  cfg.validate();
  check_interval(spec, cfg.a, cfg.b);
  return spec.f(cfg.a) + (cfg.b - cfg.a) * spec.f_prime(cfg.a);
}

double epsilon_bound_like(const ExpansionConfig& cfg, const DerivativeBounds& bounds) {
  cfg.validate();
  return (cfg.b - cfg.a) * bounds.span() / (8.0 * cfg.n);
}

double epsilon_bound_classical(const ExpansionConfig& cfg, const DerivativeBounds& bounds) {
  cfg.validate();
  return (cfg.b - cfg.a) / 2.0 * bounds.sup_abs();
}

ExpansionReport evaluate(const FunctionSpec& spec, const ExpansionConfig& cfg,
                         ExpansionMethod method, bool safe_mode) {
  cfg.validate();
  auto bounds = second_derivative_bounds(spec, cfg.a, cfg.b);
  if (safe_mode) bounds = widen_for_safety(bounds);
  return evaluate(spec, cfg, method, bounds);
}

ExpansionReport evaluate(const FunctionSpec& spec, const ExpansionConfig& cfg,
                         ExpansionMethod method, const DerivativeBounds& bounds) {
  cfg.validate();
  if (bounds.m2 > bounds.M2) throw Error(ErrorCode::InvalidArgument, "m2 must not exceed M2");

  ExpansionReport r;
  r.method = method;
  r.n = cfg.n;
  r.bounds = bounds;
  r.truth = spec.f(cfg.b);
  const double width = cfg.b - cfg.a;

  if (method == ExpansionMethod::TaylorLike) {
    r.approx = taylor_like_approx(spec, cfg);
    r.epsilon_bound = epsilon_bound_like(cfg, bounds);
    r.epsilon_lower = -r.epsilon_bound;
    r.epsilon_upper = r.epsilon_bound;
  } else {
    r.approx = taylor_classical_approx(spec, cfg);
    r.epsilon_bound = epsilon_bound_classical(cfg, bounds);
    r.epsilon_lower = width / 2.0 * bounds.m2;
    r.epsilon_upper = width / 2.0 * bounds.M2;
  }

  r.epsilon = (r.truth - r.approx) / width;
  r.abs_error = std::abs(r.truth - r.approx);
  r.abs_error_bound = width * r.epsilon_bound;
  return r;
}

}  // namespace sharpbound
