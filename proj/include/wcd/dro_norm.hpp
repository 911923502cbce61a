#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wcd/core.hpp"
#include "wcd/rootfind.hpp"

namespace wcd {

// Greedy mass transfer for the l-infinity ball: coordinates are visited from
// the largest cost down and raised by at most min(1 - p_i, eps), taking the
// mass from the cheapest coordinates, each lowered by at most eps. Accepts
// eps >= 0.
std::vector<double> sweep_linf(std::span<const double> q, std::span<const double> c, double eps);

// Same transfer for the l1 ball: the total moved mass is capped at eps / 2
// and donors may be drained to zero.
std::vector<double> sweep_l1(std::span<const double> q, std::span<const double> c, double eps);

SolverResult solve_linf(const DroInstance& inst);
SolverResult solve_l1(const DroInstance& inst);

/// Trivial candidate for the l2 ball: the missing mass 1 - sum_I q is shared
/// equally over the argmax set I. Returned only if it lies inside the ball.
std::optional<std::vector<double>> l2_trivial(const Distribution& q, const CostVector& c,
                                              double eps);

struct L2InnerSolution {
  double mu;
  double lambda_of_mu;
  /// |{i : lambda - c_i < mu q_i}|
  std::size_t active_set_size;
};

/// Evaluates h6 and its slope for one instance. Holds a sort buffer, so a
/// single object must not be shared between threads.
class L2Equation {
 public:
  explicit L2Equation(const DroInstance& inst);

  /// The unique lambda with sum_i min(lambda - c_i, mu q_i) = 0, found by
  /// sorting mu q + c in decreasing order and scanning for the breakpoint of
  /// sum_i max(mu q_i + c_i - lambda, 0) = mu.
  L2InnerSolution inner(double mu);

  /// sum_i min^2(lambda(mu) - c_i, mu q_i) - eps^2 mu^2
  double h6(double mu);

  /// h6 together with its slope
  ///   2 mu ((sum_{i not active} q_i)^2 / |active| + sum_{i not active} q_i^2 - eps^2).
  std::pair<double, double> h6_with_slope(double mu);

 private:
  const DroInstance& inst_;
  std::vector<double> shifted_;
};

double lambda_of_mu(double mu, const DroInstance& inst);
double h6(double mu, const DroInstance& inst);

/// Worst case over the l2 ball: trivial candidate when feasible, otherwise
/// guarded Newton on h6 as a function of t = mu^2, where it is concave and
/// piecewise linear, started at t = n (cmax - cmin)^2 / eps^2 where h6 <= 0.
SolverResult solve_l2(const DroInstance& inst, const RootConfig& cfg = {});

}  // namespace wcd
