#pragma once

#include "sharpbound/registry.hpp"

#include <span>
#include <vector>

namespace sharpbound {

/// Strictly increasing nodes on [0, 1] with x_0 = 0 and x_{N+1} = 1.
class Mesh {
public:
  explicit Mesh(std::vector<double> nodes);

  std::span<const double> nodes() const { return nodes_; }
  std::size_t cells() const { return nodes_.size() - 1; }
  double width(std::size_t cell) const { return nodes_[cell + 1] - nodes_[cell]; }
  /// Largest cell width.
  double h() const { return h_; }
  /// Index of the cell containing x; nodes belong to the cell on their right
  /// except x = 1.
  std::size_t locate(double x) const;

private:
  std::vector<double> nodes_;
  double h_ = 0.0;
};

Mesh build_uniform_mesh(unsigned cells);

/// Continuous piecewise-affine interpolant of nodal values.
class P1Interpolant {
public:
  P1Interpolant(Mesh mesh, std::vector<double> values);

  const Mesh& mesh() const { return mesh_; }
  std::span<const double> values() const { return values_; }

  double eval(double x) const;
  /// Constant derivative on the given cell.
  double slope(std::size_t cell) const;
  /// Affine restriction of the interpolant to `cell`, valid on the closed cell.
  double eval_on_cell(std::size_t cell, double x) const;

private:
  Mesh mesh_;
  std::vector<double> values_;
};

P1Interpolant interpolate(const FunctionSpec& spec, const Mesh& mesh);

inline constexpr unsigned kDefaultQuadPoints = 32;
inline constexpr double kVerifySlack = 1e-10;

struct NormReport {
  double l1_value_error = 0.0;  // ||u - u_I||_{0,1}
  double l1_deriv_error = 0.0;  // ||u' - u_I'||_{0,1}
  double w11_error = 0.0;       // sum of the two
  double classical_bound = 0.0;
  double taylor_like_bound = 0.0;
  double asymptotic_bound = 0.0;
  unsigned n = 1;
  double sup_u2 = 0.0;
  double h = 0.0;
  DerivativeBounds bounds;
  bool pass_classical = false;     // w11_error <= classical_bound
  bool pass_taylor_like = false;   // w11_error <= taylor_like_bound
  bool pass_ordering = false;      // taylor_like_bound <= classical_bound

  bool all_pass() const { return pass_classical && pass_taylor_like && pass_ordering; }
};

/// Fills only the three error fields.
NormReport w11_error(const FunctionSpec& spec, const P1Interpolant& interp,
                     unsigned quad_points = kDefaultQuadPoints);

/// (h + h^2) ||u''||_inf
double classical_bound(double h, double sup_u2);
/// (h + h^2)/2 ||u''||_inf + (h + h^2)/(8n) (M2 - m2)
double taylor_like_bound(double h, unsigned n, double sup_u2, const DerivativeBounds& bounds);
/// Limit of taylor_like_bound as n grows: (h + h^2)/2 ||u''||_inf
double asymptotic_bound(double h, double sup_u2);

/// Measures the interpolation error and checks it against all three bounds.
/// ||u''||_inf and (m2, M2) come from the registry bounds on [0, 1].
NormReport verify(const FunctionSpec& spec, const Mesh& mesh, unsigned n,
                  unsigned quad_points = kDefaultQuadPoints, bool safe_mode = false);

}  // namespace sharpbound
