#pragma once

#include <vector>

namespace sharpbound {

/// Row i reads sub[i-1] x[i-1] + diag[i] x[i] + sup[i] x[i+1] = rhs[i].
struct TridiagonalSystem {
  std::vector<double> sub;
  std::vector<double> diag;
  std::vector<double> sup;
  std::vector<double> rhs;

  std::size_t size() const { return diag.size(); }
  /// |diag[i]| >= |sub[i-1]| + |sup[i]| for every row.
  bool diagonally_dominant() const;
  /// Infinity norm of A x - rhs.
  double residual(const std::vector<double>& x) const;
};

/// Thomas algorithm. Rejects malformed or non-dominant systems and throws
/// NearSingular when a pivot falls below 1e-14 in magnitude.
std::vector<double> thomas_solve(const TridiagonalSystem& sys);

}  // namespace sharpbound
