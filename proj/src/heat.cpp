#include "sharpbound/heat.hpp"

#include "sharpbound/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace sharpbound {

void HeatProblem::validate() const {
  if (!(T > 0.0)) throw Error(ErrorCode::InvalidArgument, "T must be positive");
  if (!initial || !bc_left || !bc_right)
    throw Error(ErrorCode::InvalidArgument, "heat problem needs initial and boundary data");
  if (std::abs(initial(0.0) - bc_left(0.0)) > 1e-12 ||
      std::abs(initial(1.0) - bc_right(0.0)) > 1e-12)
    throw Error(ErrorCode::InvalidArgument, "initial data incompatible with boundary data");
}

HeatProblem manufactured_sine_problem(double T) {
  constexpr double pi = std::numbers::pi;
  HeatProblem p;
  p.initial = [](double x) { return std::sin(pi * x); };
  p.bc_left = [](double) { return 0.0; };
  p.bc_right = [](double) { return 0.0; };
  p.exact = [](double x, double t) { return std::exp(-pi * pi * t) * std::sin(pi * x); };
  p.T = T;
  return p;
}

HeatProblem constant_problem(double c, double T) {
  HeatProblem p;
  p.initial = [c](double) { return c; };
  p.bc_left = [c](double) { return c; };
  p.bc_right = [c](double) { return c; };
  p.exact = [c](double, double) { return c; };
  p.T = T;
  return p;
}

DerivativeBounds manufactured_utt_bounds(double T) {
  if (!(T > 0.0)) throw Error(ErrorCode::InvalidArgument, "T must be positive");
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return {0.0, pi2 * pi2, true};
}

GridConfig GridConfig::from_lambda(unsigned J, double lambda) {
  GridConfig g{J, 0.0};
  const double h = g.h();
  g.k = lambda * h * h;
  g.validate();
  return g;
}

void GridConfig::validate() const {
  if (J == 0) throw Error(ErrorCode::InvalidArgument, "J must be positive");
  if (!(k > 0.0) || !std::isfinite(k)) throw Error(ErrorCode::InvalidArgument, "k must be positive");
}

std::string_view to_string(SchemeKind scheme) { return scheme == SchemeKind::FD1 ? "fd1" : "fd2"; }

StateVector initial_state(const HeatProblem& problem, const GridConfig& grid) {
  grid.validate();
  StateVector s;
  s.values.resize(grid.J);
  for (std::size_t j = 0; j < grid.J; ++j) s.values[j] = problem.initial(grid.x(j));
  return s;
}

namespace {

void check_state(const StateVector& state, const GridConfig& grid) {
  grid.validate();
  if (state.values.size() != grid.J)
    throw Error(ErrorCode::InvalidArgument, "state length does not match grid J");
}

TridiagonalSystem constant_diagonals(std::size_t n, double diag, double off) {
  TridiagonalSystem sys;
  sys.diag.assign(n, diag);
  sys.sub.assign(n - 1, off);
  sys.sup.assign(n - 1, off);
  sys.rhs.assign(n, 0.0);
  return sys;
}

}  // namespace

TridiagonalSystem assemble_fd1(const StateVector& state, const GridConfig& grid,
                               const HeatProblem& problem) {
  check_state(state, grid);
  const double lambda = grid.lambda();
  const double t_next = state.t + grid.k;
  auto sys = constant_diagonals(grid.J, 1.0 + 2.0 * lambda, -lambda);
  sys.rhs = state.values;
  sys.rhs.front() += lambda * problem.bc_left(t_next);
  sys.rhs.back() += lambda * problem.bc_right(t_next);
  return sys;
}

TridiagonalSystem assemble_fd2(const StateVector& state, const GridConfig& grid,
                               const HeatProblem& problem) {
  check_state(state, grid);
  const double lambda = grid.lambda();
  const double half = 0.5 * lambda;
  const double t = state.t;
  const double t_next = t + grid.k;
  const std::size_t n = grid.J;
  const auto& u = state.values;

  auto sys = constant_diagonals(n, 1.0 + lambda, -half);
  for (std::size_t j = 0; j < n; ++j) {
    const double left = j > 0 ? u[j - 1] : problem.bc_left(t);
    const double right = j + 1 < n ? u[j + 1] : problem.bc_right(t);
    sys.rhs[j] = half * (left + right) + (1.0 - lambda) * u[j];
  }
  sys.rhs.front() += half * problem.bc_left(t_next);
  sys.rhs.back() += half * problem.bc_right(t_next);
  return sys;
}

StateVector step_fd1(const StateVector& state, const GridConfig& grid, const HeatProblem& problem) {
  return {state.t + grid.k, thomas_solve(assemble_fd1(state, grid, problem))};
}

StateVector step_fd2(const StateVector& state, const GridConfig& grid, const HeatProblem& problem) {
  return {state.t + grid.k, thomas_solve(assemble_fd2(state, grid, problem))};
}

StateVector step(SchemeKind scheme, const StateVector& state, const GridConfig& grid,
                 const HeatProblem& problem) {
  return scheme == SchemeKind::FD1 ? step_fd1(state, grid, problem)
                                   : step_fd2(state, grid, problem);
}

double amplification_factor(SchemeKind scheme, double lambda, double theta) {
  const double s = std::sin(0.5 * theta);
  const double X = 2.0 * lambda * s * s;
  return scheme == SchemeKind::FD1 ? 1.0 / (1.0 + 2.0 * X) : (1.0 - X) / (1.0 + X);
}

double max_abs_amplification(SchemeKind scheme, double lambda, int samples) {
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double theta = samples > 1 ? 2.0 * std::numbers::pi * i / (samples - 1) : 0.0;
    worst = std::max(worst, std::abs(amplification_factor(scheme, lambda, theta)));
  }
  return worst;
}

TimeDerivativeComparison time_derivative_bound_comparison(double k, double m2, double M2) {
  if (m2 > M2) throw Error(ErrorCode::InvalidArgument, "m2 must not exceed M2");
  TimeDerivativeComparison c;
  c.bound_new = k / 4.0 * (M2 - m2);
  c.bound_classical = k / 2.0 * std::max(std::abs(m2), std::abs(M2));
  c.ratio = c.bound_classical == 0.0 ? 0.0 : c.bound_new / c.bound_classical;
  return c;
}

namespace {

double max_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

HeatRun run(const HeatProblem& problem, const GridConfig& grid, SchemeKind scheme,
            const RunOptions& options) {
  problem.validate();
  grid.validate();

  const double total = problem.T / grid.k;
  const double needed = std::max(1.0, std::ceil(total - 1e-9));
  if (needed > static_cast<double>(options.max_steps)) {
    std::ostringstream msg;
    msg << "step budget exceeded: " << needed << " steps > " << options.max_steps;
    throw Error(ErrorCode::StepBudget, msg.str());
  }
  const auto steps = static_cast<std::size_t>(needed);

  HeatRun r;
  r.scheme = scheme;
  r.grid = grid;
  r.T = problem.T;
  r.steps = steps;
  StateVector state = initial_state(problem, grid);
  r.max_norm_history.reserve(steps + 1);
  r.max_norm_history.push_back(max_norm(state.values));
  if (options.record_trajectory) r.trajectory.push_back(state);

  for (std::size_t i = 0; i < steps; ++i) {
    GridConfig g = grid;
    const bool last = i + 1 == steps;
    if (last) g.k = problem.T - state.t;
    state = step(scheme, state, g, problem);
    if (last) state.t = problem.T;
    r.max_norm_history.push_back(max_norm(state.values));
    if (options.record_trajectory) r.trajectory.push_back(state);
  }

  if (problem.exact) {
    double emax = 0.0;
    double esum = 0.0;
    for (std::size_t j = 0; j < grid.J; ++j) {
      const double e = std::abs(state.values[j] - problem.exact(grid.x(j), problem.T));
      emax = std::max(emax, e);
      esum += e;
    }
    r.error_max = emax;
    r.error_l1 = grid.h() * esum;
  }
  r.final_state = std::move(state);
  return r;
}

double observed_order(double coarse_error, double fine_error) {
  return std::log2(coarse_error / fine_error);
}

bool is_geometric(const std::vector<GridConfig>& refinements, StudyMode mode) {
  for (std::size_t i = 1; i < refinements.size(); ++i) {
    const auto& coarse = refinements[i - 1];
    const auto& fine = refinements[i];
    const bool ok = mode == StudyMode::SpaceAtFixedLambda
                        ? fine.J + 1 == 2 * (coarse.J + 1) &&
                              std::abs(fine.lambda() - coarse.lambda()) <= 1e-12 * coarse.lambda()
                        : fine.J == coarse.J && std::abs(2.0 * fine.k - coarse.k) <= 1e-12 * coarse.k;
    if (!ok) return false;
  }
  return true;
}

std::vector<ConvergenceRow> convergence_study(const HeatProblem& problem, SchemeKind scheme,
                                              const std::vector<GridConfig>& refinements,
                                              StudyMode mode) {
  if (!problem.exact)
    throw Error(ErrorCode::MissingExact, "convergence study needs an exact solution");

  if (!is_geometric(refinements, mode))
    throw Error(ErrorCode::InvalidArgument, "refinements must be geometric with factor 2");

  std::vector<ConvergenceRow> rows;
  rows.reserve(refinements.size());
  for (const auto& grid : refinements) {
    const HeatRun r = run(problem, grid, scheme);
    ConvergenceRow row;
    row.grid = grid;
    row.h = grid.h();
    row.k = grid.k;
    row.error_max = *r.error_max;
    row.error_l1 = *r.error_l1;
    if (!rows.empty()) {
      row.order_max = observed_order(rows.back().error_max, row.error_max);
      row.order_l1 = observed_order(rows.back().error_l1, row.error_l1);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace sharpbound
