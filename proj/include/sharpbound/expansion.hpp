#pragma once

#include "sharpbound/registry.hpp"

#include <string_view>
#include <vector>

namespace sharpbound {

/// Expansion of f(b) around a using n equal subintervals of [a, b].
struct ExpansionConfig {
  double a = 0.0;
  double b = 1.0;
  unsigned n = 1;

  void validate() const;
};

enum class ExpansionMethod { Classical, TaylorLike };

std::string_view to_string(ExpansionMethod method);

/// One evaluation of an expansion against the exact value.
///
/// The remainder is per unit length: truth = approx + (b - a) * epsilon.
/// epsilon_bound bounds |epsilon|; abs_error_bound = (b - a) * epsilon_bound
/// bounds |truth - approx|. [epsilon_lower, epsilon_upper] is the signed
/// enclosure the bound comes from.
struct ExpansionReport {
  double approx = 0.0;
  double truth = 0.0;
  double epsilon = 0.0;
  double epsilon_bound = 0.0;
  double epsilon_lower = 0.0;
  double epsilon_upper = 0.0;
  double abs_error = 0.0;
  double abs_error_bound = 0.0;
  ExpansionMethod method = ExpansionMethod::TaylorLike;
  unsigned n = 1;
  DerivativeBounds bounds;

  /// |epsilon| <= epsilon_bound + slack * (1 + epsilon_bound).
  bool within_bound(double slack = 1e-12) const;
};

/// Endpoint weights 1/(2n), interior weights 1/n.
std::vector<double> weights(unsigned n);

/// a + (k (b - a)) / n, with k = n clamped to b.
double node(const ExpansionConfig& cfg, unsigned k);

double taylor_like_approx(const FunctionSpec& spec, const ExpansionConfig& cfg);
double taylor_classical_approx(const FunctionSpec& spec, const ExpansionConfig& cfg);

/// (b - a)(M2 - m2) / (8n)
double epsilon_bound_like(const ExpansionConfig& cfg, const DerivativeBounds& bounds);
/// (b - a)/2 * max(|m2|, |M2|)
double epsilon_bound_classical(const ExpansionConfig& cfg, const DerivativeBounds& bounds);

/// Uses the registry bounds of f'' on [a, b].
ExpansionReport evaluate(const FunctionSpec& spec, const ExpansionConfig& cfg,
                         ExpansionMethod method, bool safe_mode = false);

/// Same, with caller-supplied bounds on f''.
ExpansionReport evaluate(const FunctionSpec& spec, const ExpansionConfig& cfg,
                         ExpansionMethod method, const DerivativeBounds& bounds);

}  // namespace sharpbound
