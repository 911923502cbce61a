#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wcd/core.hpp"

namespace wcd {

struct GridConfig {
  double step = 1e-3;
};

struct GridResult {
  std::vector<double> p;
  double objective;
  std::size_t feasible_points;
};

inline constexpr std::size_t kMaxGridDimension = 4;

/// Brute-force maximum of c'p over the lattice {k * step : sum k = 1/step}
/// intersected with the instance's ball. Lattice points at infinite
/// divergence are infeasible. Only for n <= 4 (TooLarge otherwise).
GridResult grid_solve(const DroInstance& inst, const GridConfig& cfg);

/// Brute-force minimum of 0.5 ||p - q||^2 over the same lattice intersected
/// with the box l <= p <= u. Lattice points are non-negative, so this only
/// searches the part of the box inside the probability simplex.
GridResult grid_solve_simplex(const BoxSimplexInstance& inst, const GridConfig& cfg);

struct ResidualReport {
  double sum_violation = 0.0;
  /// Negative entries for DRO; bound violations for the box simplex.
  double nonneg_violation = 0.0;
  double ball_violation = 0.0;
  double root_residual = 0.0;
  /// How far the solver falls short of the grid optimum, clipped at zero.
  std::optional<double> objective_gap_vs_oracle;

  /// Largest of the feasibility and root fields (the oracle gap excluded).
  double max_feasibility() const;
};

ResidualReport residuals(const DroInstance& inst, const SolverResult& result,
                         std::optional<double> oracle_objective = std::nullopt);

ResidualReport residuals(const BoxSimplexInstance& inst, const SolverResult& result,
                         std::optional<double> oracle_objective = std::nullopt);

struct OracleCheckSummary {
  std::size_t trials = 0;
  std::size_t failures = 0;
  double worst_gap = 0.0;
  double worst_residual = 0.0;
  std::vector<std::string> messages;
};

inline constexpr double kOracleResidualTolerance = 1e-6;

/// Solves `trials` generated instances of size n and compares each with the
/// grid optimum. A trial fails when the solver trails the grid by more than
/// 5 * step or any feasibility/root residual exceeds 1e-6.
OracleCheckSummary oracle_check(Method method, std::size_t n, std::size_t trials, double step,
                                double epsilon, std::uint64_t seed);

}  // namespace wcd
