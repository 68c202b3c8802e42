#pragma once

#include "sharpbound/registry.hpp"
#include "sharpbound/tridiagonal.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace sharpbound {

/// u_t = u_xx on [0, 1] x [0, T] with Dirichlet data.
struct HeatProblem {
  RealFn initial;
  RealFn bc_left;
  RealFn bc_right;
  std::function<double(double, double)> exact;  // u(x, t); empty when unknown
  double T = 0.1;

  void validate() const;
};

/// u = exp(-pi^2 t) sin(pi x), zero boundary values.
HeatProblem manufactured_sine_problem(double T);
/// u = c everywhere.
HeatProblem constant_problem(double c, double T);

/// Bounds of u_tt for the manufactured solution over [0, 1] x [0, T]:
/// u_tt = pi^4 exp(-pi^2 t) sin(pi x) lies in [0, pi^4].
DerivativeBounds manufactured_utt_bounds(double T);

/// J interior nodes x_j = j h, h = 1/(J + 1), time step k.
struct GridConfig {
  unsigned J = 1;
  double k = 0.0;

  static GridConfig from_lambda(unsigned J, double lambda);

  double h() const { return 1.0 / (J + 1.0); }
  double lambda() const { return k * (J + 1.0) * (J + 1.0); }
  /// x of interior node j (0-based), i.e. (j + 1) h.
  double x(std::size_t j) const { return static_cast<double>(j + 1) / (J + 1.0); }
  void validate() const;
};

enum class SchemeKind { FD1, FD2 };

std::string_view to_string(SchemeKind scheme);

struct StateVector {
  double t = 0.0;
  std::vector<double> values;
};

StateVector initial_state(const HeatProblem& problem, const GridConfig& grid);

/// (1 + 2 lambda) u_j - lambda (u_{j-1} + u_{j+1}) = u_j^n, boundary values at t + k.
TridiagonalSystem assemble_fd1(const StateVector& state, const GridConfig& grid,
                               const HeatProblem& problem);
/// -lambda/2 u_{j-1} + (1 + lambda) u_j - lambda/2 u_{j+1}
///   = lambda/2 (u_{j-1}^n + u_{j+1}^n) + (1 - lambda) u_j^n,
/// boundary neighbours at t on the right-hand side and at t + k on the left.
TridiagonalSystem assemble_fd2(const StateVector& state, const GridConfig& grid,
                               const HeatProblem& problem);

StateVector step_fd1(const StateVector& state, const GridConfig& grid, const HeatProblem& problem);
StateVector step_fd2(const StateVector& state, const GridConfig& grid, const HeatProblem& problem);
StateVector step(SchemeKind scheme, const StateVector& state, const GridConfig& grid,
                 const HeatProblem& problem);

/// Von Neumann factor for the mode exp(i theta j), with X = 2 lambda sin^2(theta/2):
/// FD1 gives 1/(1 + 2X), FD2 gives (1 - X)/(1 + X).
double amplification_factor(SchemeKind scheme, double lambda, double theta);

/// max |A| over `samples` equispaced theta in [0, 2 pi].
double max_abs_amplification(SchemeKind scheme, double lambda, int samples = 1000);

struct TimeDerivativeComparison {
  double bound_classical = 0.0;  // (k/2) max(|m2|, |M2|)
  double bound_new = 0.0;        // (k/4) (M2 - m2)
  double ratio = 0.0;            // bound_new / bound_classical, 0/0 -> 0
};

TimeDerivativeComparison time_derivative_bound_comparison(double k, double m2, double M2);

inline constexpr std::size_t kMaxSteps = 10'000'000;

struct RunOptions {
  bool record_trajectory = false;
  std::size_t max_steps = kMaxSteps;
};

struct HeatRun {
  SchemeKind scheme = SchemeKind::FD2;
  GridConfig grid;
  double T = 0.0;
  std::size_t steps = 0;
  StateVector final_state;
  std::vector<double> max_norm_history;  // entry 0 is the initial state
  std::vector<StateVector> trajectory;   // only with record_trajectory
  std::optional<double> error_max;       // vs exact at T
  std::optional<double> error_l1;        // h * sum |e_j|
};

/// Steps to T; the last step is shortened so the run lands on T exactly.
HeatRun run(const HeatProblem& problem, const GridConfig& grid, SchemeKind scheme,
            const RunOptions& options = {});

enum class StudyMode { SpaceAtFixedLambda, TimeAtFixedH };

struct ConvergenceRow {
  GridConfig grid;
  double h = 0.0;
  double k = 0.0;
  double error_max = 0.0;
  double error_l1 = 0.0;
  std::optional<double> order_max;  // log2(previous / this), absent on the first row
  std::optional<double> order_l1;
};

/// True when consecutive grids halve h at fixed lambda (space) or halve k at
/// fixed J (time).
bool is_geometric(const std::vector<GridConfig>& refinements, StudyMode mode);

/// Refinements must halve h at fixed lambda (space) or halve k at fixed J (time).
std::vector<ConvergenceRow> convergence_study(const HeatProblem& problem, SchemeKind scheme,
                                              const std::vector<GridConfig>& refinements,
                                              StudyMode mode);

double observed_order(double coarse_error, double fine_error);

}  // namespace sharpbound
