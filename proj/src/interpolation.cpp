#include "sharpbound/interpolation.hpp"

#include "sharpbound/error.hpp"
#include "sharpbound/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sharpbound {

Mesh::Mesh(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) throw Error(ErrorCode::InvalidArgument, "mesh needs at least two nodes");
  if (nodes_.front() != 0.0 || nodes_.back() != 1.0)
    throw Error(ErrorCode::InvalidArgument, "mesh endpoints must be exactly 0 and 1");
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
    if (!(nodes_[i] < nodes_[i + 1])) {
      std::ostringstream msg;
      msg << "mesh nodes not strictly increasing at index " << i;
      throw Error(ErrorCode::InvalidArgument, msg.str());
    }
    h_ = std::max(h_, width(i));
  }
}

std::size_t Mesh::locate(double x) const {
  const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
  if (it == nodes_.begin()) return 0;
  return std::min<std::size_t>(static_cast<std::size_t>(it - nodes_.begin()) - 1, cells() - 1);
}

Mesh build_uniform_mesh(unsigned cells) {
  if (cells == 0) throw Error(ErrorCode::InvalidArgument, "cells must be positive");
  std::vector<double> nodes(cells + 1);
  for (unsigned i = 0; i <= cells; ++i) nodes[i] = static_cast<double>(i) / cells;
  return Mesh(std::move(nodes));
}

P1Interpolant::P1Interpolant(Mesh mesh, std::vector<double> values)
    : mesh_(std::move(mesh)), values_(std::move(values)) {
  if (values_.size() != mesh_.nodes().size())
    throw Error(ErrorCode::InvalidArgument, "one nodal value per mesh node required");
}

double P1Interpolant::slope(std::size_t cell) const {
  return (values_[cell + 1] - values_[cell]) / mesh_.width(cell);
}

double P1Interpolant::eval_on_cell(std::size_t cell, double x) const {
  const double x0 = mesh_.nodes()[cell];
  if (x == x0) return values_[cell];
  if (x == mesh_.nodes()[cell + 1]) return values_[cell + 1];
  return values_[cell] + slope(cell) * (x - x0);
}

double P1Interpolant::eval(double x) const { return eval_on_cell(mesh_.locate(x), x); }

P1Interpolant interpolate(const FunctionSpec& spec, const Mesh& mesh) {
  if (!spec.domain.contains(0.0, 1.0)) {
    throw Error(ErrorCode::DomainViolation,
                "domain violation: [0, 1] not inside the domain of " + spec.id);
  }
  std::vector<double> values;
  values.reserve(mesh.nodes().size());
  for (double x : mesh.nodes()) values.push_back(spec.f(x));
  return P1Interpolant(mesh, std::move(values));
}

NormReport w11_error(const FunctionSpec& spec, const P1Interpolant& interp, unsigned quad_points) {
  if (quad_points < 2) throw Error(ErrorCode::InvalidArgument, "quad_points must be >= 2");
  if (!spec.domain.contains(0.0, 1.0)) {
    throw Error(ErrorCode::DomainViolation,
                "domain violation: [0, 1] not inside the domain of " + spec.id);
  }

  const auto rule = gauss_legendre(quad_points);
  const Mesh& mesh = interp.mesh();
  NormReport r;
  for (std::size_t c = 0; c < mesh.cells(); ++c) {
    const double lo = mesh.nodes()[c];
    const double hi = mesh.nodes()[c + 1];
    const double slope = interp.slope(c);
    r.l1_value_error += integrate_abs(
        [&](double x) { return spec.f(x) - interp.eval_on_cell(c, x); }, lo, hi, rule);
    r.l1_deriv_error += integrate_abs(
        [&](double x) { return spec.f_prime(x) - slope; }, lo, hi, rule);
  }
  r.w11_error = r.l1_value_error + r.l1_deriv_error;
  r.h = mesh.h();
  return r;
}

double classical_bound(double h, double sup_u2) { return (h + h * h) * sup_u2; }

double taylor_like_bound(double h, unsigned n, double sup_u2, const DerivativeBounds& bounds) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  const double hh = h + h * h;
  return hh / 2.0 * sup_u2 + hh / (8.0 * n) * bounds.span();
}

double asymptotic_bound(double h, double sup_u2) { return (h + h * h) / 2.0 * sup_u2; }

NormReport verify(const FunctionSpec& spec, const Mesh& mesh, unsigned n, unsigned quad_points,
                  bool safe_mode) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  auto bounds = second_derivative_bounds(spec, 0.0, 1.0);
  if (safe_mode) bounds = widen_for_safety(bounds);

  NormReport r = w11_error(spec, interpolate(spec, mesh), quad_points);
  r.n = n;
  r.bounds = bounds;
  r.sup_u2 = bounds.sup_abs();
  r.classical_bound = classical_bound(r.h, r.sup_u2);
  r.taylor_like_bound = taylor_like_bound(r.h, n, r.sup_u2, bounds);
  r.asymptotic_bound = asymptotic_bound(r.h, r.sup_u2);
  r.pass_classical = r.w11_error <= r.classical_bound + kVerifySlack;
  r.pass_taylor_like = r.w11_error <= r.taylor_like_bound + kVerifySlack;
  r.pass_ordering = r.taylor_like_bound <= r.classical_bound + kVerifySlack;
  return r;
}

}  // namespace sharpbound
