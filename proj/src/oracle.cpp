#include "wcd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "wcd/bench.hpp"
#include "wcd/box_simplex.hpp"
#include "wcd/dro.hpp"

namespace wcd {

namespace {

// Calls visit(p) for every lattice point of the simplex with spacing 1/total.
void for_each_lattice_point(std::size_t n, long total,
                            const std::function<void(const std::vector<double>&)>& visit) {
  std::vector<long> k(n, 0);
  std::vector<double> p(n, 0.0);
  const double step = 1.0 / static_cast<double>(total);
  // Odometer over k[0..n-2]; the last part takes the remainder.
  std::function<void(std::size_t, long)> rec = [&](std::size_t idx, long left) {
    if (idx + 1 == n) {
      k[idx] = left;
      for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<double>(k[i]) * step;
      visit(p);
      return;
    }
    for (long v = 0; v <= left; ++v) {
      k[idx] = v;
      rec(idx + 1, left - v);
    }
  };
  rec(0, total);
}

long lattice_total(std::size_t n, const GridConfig& cfg) {
  if (n > kMaxGridDimension) {
    throw Error(ErrorCode::TooLarge, "grid search is limited to n <= 4");
  }
  if (!(cfg.step > 0.0) || cfg.step > 1.0) {
    throw Error(ErrorCode::DomainViolation, "grid step must lie in (0, 1]");
  }
  return std::lround(1.0 / cfg.step);
}

}  // namespace

GridResult grid_solve(const DroInstance& inst, const GridConfig& cfg) {
  const std::size_t n = inst.q.size();
  const long total = lattice_total(n, cfg);
  GridResult best{{}, -std::numeric_limits<double>::infinity(), 0};
  const auto c = inst.c.costs();
  for_each_lattice_point(n, total, [&](const std::vector<double>& p) {
    if (!(ball_distance(inst.distance, p, inst.q) <= inst.epsilon)) return;
    ++best.feasible_points;
    const double obj = dot(p, c);
    if (obj > best.objective) {
      best.objective = obj;
      best.p = p;
    }
  });
  return best;
}

GridResult grid_solve_simplex(const BoxSimplexInstance& inst, const GridConfig& cfg) {
  const std::size_t n = inst.q.size();
  const long total = lattice_total(n, cfg);
  GridResult best{{}, std::numeric_limits<double>::infinity(), 0};
  for_each_lattice_point(n, total, [&](const std::vector<double>& p) {
    double dist2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i] < inst.l[i] || p[i] > inst.u[i]) return;
      dist2 += (p[i] - inst.q[i]) * (p[i] - inst.q[i]);
    }
    ++best.feasible_points;
    if (0.5 * dist2 < best.objective) {
      best.objective = 0.5 * dist2;
      best.p = p;
    }
  });
  return best;
}

double ResidualReport::max_feasibility() const {
  return std::max({sum_violation, nonneg_violation, ball_violation, root_residual});
}

ResidualReport residuals(const DroInstance& inst, const SolverResult& result,
                         std::optional<double> oracle_objective) {
  ResidualReport rep;
  rep.sum_violation = std::abs(compensated_sum(result.p) - 1.0);
  double min_p = 0.0;
  for (double v : result.p) min_p = std::min(min_p, v);
  rep.nonneg_violation = -min_p;
  std::vector<double> clipped(result.p);
  for (double& v : clipped) v = std::max(v, 0.0);
  const double dist = ball_distance(inst.distance, clipped, inst.q);
  rep.ball_violation = std::isfinite(dist) ? std::max(dist - inst.epsilon, 0.0)
                                           : std::numeric_limits<double>::infinity();
  rep.root_residual = root_residual(inst, result);
  if (oracle_objective) {
    rep.objective_gap_vs_oracle = std::max(*oracle_objective - result.objective, 0.0);
  }
  return rep;
}

ResidualReport residuals(const BoxSimplexInstance& inst, const SolverResult& result,
                         std::optional<double> oracle_objective) {
  ResidualReport rep;
  rep.sum_violation = std::abs(compensated_sum(result.p) - 1.0);
  for (std::size_t i = 0; i < result.p.size(); ++i) {
    rep.nonneg_violation = std::max(
        {rep.nonneg_violation, inst.l[i] - result.p[i], result.p[i] - inst.u[i]});
  }
  if (result.lambda) rep.root_residual = std::abs(h7(*result.lambda, inst));
  if (oracle_objective) {
    rep.objective_gap_vs_oracle = std::max(result.objective - *oracle_objective, 0.0);
  }
  return rep;
}

OracleCheckSummary oracle_check(Method method, std::size_t n, std::size_t trials, double step,
                                double epsilon, std::uint64_t seed) {
  OracleCheckSummary summary;
  const GridConfig grid{step};
  const double gap_tol = 5.0 * step;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto s = trial_seed(seed, n, t);
    ResidualReport rep;
    if (method == Method::Simplex) {
      const auto inst = generate_box_simplex(n, s);
      const auto best = grid_solve_simplex(inst, grid);
      rep = residuals(inst, solve_box_simplex(inst), best.objective);
    } else {
      auto gen = generate_instance(n, s);
      const auto inst = make_dro_instance(std::move(gen.q), std::move(gen.c), epsilon,
                                          *method_distance(method));
      const auto best = grid_solve(inst, grid);
      rep = residuals(inst, solve_dro(inst), best.objective);
    }
    ++summary.trials;
    const double gap = rep.objective_gap_vs_oracle.value_or(0.0);
    summary.worst_gap = std::max(summary.worst_gap, gap);
    summary.worst_residual = std::max(summary.worst_residual, rep.max_feasibility());
    if (gap > gap_tol || !(rep.max_feasibility() <= kOracleResidualTolerance)) {
      ++summary.failures;
      summary.messages.push_back("trial " + std::to_string(t) + ": gap " + std::to_string(gap) +
                                 ", residual " + std::to_string(rep.max_feasibility()));
    }
  }
  return summary;
}

}  // namespace wcd
