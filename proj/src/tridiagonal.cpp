#include "sharpbound/tridiagonal.hpp"

#include "sharpbound/error.hpp"

#include <algorithm>
#include <cmath>

namespace sharpbound {

bool TridiagonalSystem::diagonally_dominant() const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    const double off = (i > 0 ? std::abs(sub[i - 1]) : 0.0) + (i + 1 < n ? std::abs(sup[i]) : 0.0);
    if (std::abs(diag[i]) < off) return false;
  }
  return true;
}

double TridiagonalSystem::residual(const std::vector<double>& x) const {
  const std::size_t n = size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double ax = diag[i] * x[i];
    if (i > 0) ax += sub[i - 1] * x[i - 1];
    if (i + 1 < n) ax += sup[i] * x[i + 1];
    worst = std::max(worst, std::abs(ax - rhs[i]));
  }
  return worst;
}

std::vector<double> thomas_solve(const TridiagonalSystem& sys) {
  const std::size_t n = sys.size();
  if (n == 0) return {};
  if (sys.rhs.size() != n || sys.sub.size() + 1 != n || sys.sup.size() + 1 != n)
    throw Error(ErrorCode::InvalidArgument, "tridiagonal system has inconsistent sizes");
  if (!sys.diagonally_dominant())
    throw Error(ErrorCode::InvalidArgument, "tridiagonal system is not diagonally dominant");

  constexpr double kMinPivot = 1e-14;
  std::vector<double> c(n);
  std::vector<double> d(n);

  double pivot = sys.diag[0];
  if (std::abs(pivot) < kMinPivot) throw Error(ErrorCode::NearSingular, "near-singular system");
  c[0] = n > 1 ? sys.sup[0] / pivot : 0.0;
  d[0] = sys.rhs[0] / pivot;
  for (std::size_t i = 1; i < n; ++i) {
    pivot = sys.diag[i] - sys.sub[i - 1] * c[i - 1];
    if (std::abs(pivot) < kMinPivot) throw Error(ErrorCode::NearSingular, "near-singular system");
    c[i] = i + 1 < n ? sys.sup[i] / pivot : 0.0;
    d[i] = (sys.rhs[i] - sys.sub[i - 1] * d[i - 1]) / pivot;
  }

  std::vector<double> x(n);
  x[n - 1] = d[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
  return x;
}

}  // namespace sharpbound
