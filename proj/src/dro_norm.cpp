#include "wcd/dro_norm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace wcd {

namespace {

// Indices ordered by decreasing cost; equal costs keep their input order.
std::vector<std::size_t> by_cost_descending(std::span<const double> c) {
  std::vector<std::size_t> order(c.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return c[a] > c[b]; });
  return order;
}

void check_sweep_input(std::span<const double> q, std::span<const double> c, double eps) {
  if (q.size() != c.size()) {
    throw Error(ErrorCode::DimensionMismatch, "q and c have different lengths");
  }
  if (!(eps >= 0.0)) {
    throw Error(ErrorCode::InvalidRadius, "eps must be non-negative");
  }
}

SolverResult degenerate(const DroInstance& inst) {
  SolverResult r;
  r.p.assign(inst.q.weights().begin(), inst.q.weights().end());
  r.status = SolveStatus::DegenerateObjective;
  r.objective = inst.c.cmax();
  return r;
}

}  // namespace

std::vector<double> sweep_linf(std::span<const double> q, std::span<const double> c, double eps) {
  check_sweep_input(q, c, eps);
  std::vector<double> p(q.begin(), q.end());
  if (q.empty()) return p;
  const auto order = by_cost_descending(c);
  std::size_t top = 0;
  std::size_t bottom = q.size() - 1;
  double lowered = 0.0;  // decrease already applied to p[order[bottom]]

  while (top < bottom) {
    const std::size_t i = order[top];
    const double want = std::min(1.0 - p[i], eps);
    double need = want;
    while (need > 0.0 && top < bottom) {
      const std::size_t j = order[bottom];
      const double avail = std::min(p[j], std::max(eps - lowered, 0.0));
      if (avail >= need) {
        p[j] -= need;
        lowered += need;
        need = 0.0;
      } else {
        p[j] -= avail;
        need -= avail;
        --bottom;
        lowered = 0.0;
      }
    }
    p[i] += want - need;
    ++top;
  }
  return p;
}

std::vector<double> sweep_l1(std::span<const double> q, std::span<const double> c, double eps) {
  check_sweep_input(q, c, eps);
  std::vector<double> p(q.begin(), q.end());
  if (q.empty()) return p;
  const auto order = by_cost_descending(c);
  std::size_t top = 0;
  std::size_t bottom = q.size() - 1;
  double budget = 0.5 * eps;

  while (top < bottom && budget > 0.0) {
    const std::size_t i = order[top];
    const double want = std::min(1.0 - p[i], budget);
    double need = want;
    while (need > 0.0 && top < bottom) {
      const std::size_t j = order[bottom];
      if (p[j] >= need) {
        p[j] -= need;
        need = 0.0;
      } else {
        need -= p[j];
        p[j] = 0.0;
        --bottom;
      }
    }
    const double moved = want - need;
    p[i] += moved;
    budget -= moved;
    ++top;
  }
  return p;
}

SolverResult solve_linf(const DroInstance& inst) {
  if (inst.c.constant()) return degenerate(inst);
  SolverResult r;
  r.p = sweep_linf(inst.q.weights(), inst.c.costs(), inst.epsilon);
  r.objective = dot(r.p, inst.c.costs());
  r.status = SolveStatus::ExactSweep;
  return r;
}

SolverResult solve_l1(const DroInstance& inst) {
  if (inst.c.constant()) return degenerate(inst);
  SolverResult r;
  r.p = sweep_l1(inst.q.weights(), inst.c.costs(), inst.epsilon);
  r.objective = dot(r.p, inst.c.costs());
  r.status = SolveStatus::ExactSweep;
  return r;
}

std::optional<std::vector<double>> l2_trivial(const Distribution& q, const CostVector& c,
                                              double eps) {
  const auto argmax = c.argmax_set();
  double mass = 0.0;
  for (std::size_t i : argmax) mass += q[i];
  const double share = (1.0 - mass) / static_cast<double>(argmax.size());
  std::vector<double> p(q.size(), 0.0);
  for (std::size_t i : argmax) p[i] = q[i] + share;
  double dist2 = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) dist2 += (p[i] - q[i]) * (p[i] - q[i]);
  if (std::sqrt(dist2) <= eps) return p;
  return std::nullopt;
}

L2Equation::L2Equation(const DroInstance& inst) : inst_(inst), shifted_(inst.q.size()) {}

L2InnerSolution L2Equation::inner(double mu) {
  if (!(mu > 0.0)) {
    throw Error(ErrorCode::DomainViolation, "mu must be positive");
  }
  const auto q = inst_.q.weights();
  const auto c = inst_.c.costs();
  const std::size_t n = q.size();
  for (std::size_t i = 0; i < n; ++i) shifted_[i] = mu * q[i] + c[i];
  std::sort(shifted_.begin(), shifted_.end(), std::greater<>());

  double cum = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    cum += shifted_[k - 1];
    const double level = (cum - mu) / static_cast<double>(k);
    if (k == n || shifted_[k] <= level) {
      return {mu, level, k};
    }
  }
  return {mu, 0.0, n};  // unreachable for n >= 1
}

double L2Equation::h6(double mu) { return h6_with_slope(mu).first; }

std::pair<double, double> L2Equation::h6_with_slope(double mu) {
  const auto sol = inner(mu);
  const auto q = inst_.q.weights();
  const auto c = inst_.c.costs();
  const double lambda = sol.lambda_of_mu;
  double sum_sq = 0.0;
  double inactive_mass = 0.0;
  double inactive_sq = 0.0;
  std::size_t active = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double gap = lambda - c[i];
    const double cap = mu * q[i];
    if (gap < cap) {
      sum_sq += gap * gap;
      ++active;
    } else {
      sum_sq += cap * cap;
      inactive_mass += q[i];
      inactive_sq += q[i] * q[i];
    }
  }
  const double eps2 = inst_.epsilon * inst_.epsilon;
  const double value = sum_sq - eps2 * mu * mu;
  const double slope = active == 0
                           ? 0.0
                           : 2.0 * mu *
                                 (inactive_mass * inactive_mass / static_cast<double>(active) +
                                  inactive_sq - eps2);
  return {value, slope};
}

double lambda_of_mu(double mu, const DroInstance& inst) {
  return L2Equation(inst).inner(mu).lambda_of_mu;
}

double h6(double mu, const DroInstance& inst) { return L2Equation(inst).h6(mu); }

SolverResult solve_l2(const DroInstance& inst, const RootConfig& cfg) {
  if (inst.c.constant()) return degenerate(inst);
  SolverResult r;
  if (auto p_hat = l2_trivial(inst.q, inst.c, inst.epsilon)) {
    r.p = std::move(*p_hat);
    r.objective = dot(r.p, inst.c.costs());
    r.status = SolveStatus::TrivialCase;
    return r;
  }

  // With the active set fixed, h6 = V - kappa mu^2, so h6 is piecewise linear
  // and concave in t = mu^2 and each Newton step in t lands on the root of the
  // current piece. Value and slope are both divided by t, which leaves the
  // Newton step unchanged and makes the value ||p - q||^2 - eps^2.
  L2Equation eq(inst);
  ScalarFn h([&](double t) {
    const double mu = std::sqrt(t);
    const auto [value, slope] = eq.h6_with_slope(mu);
    return std::pair{value / t, slope / (2.0 * mu * t)};
  });
  // lambda(mu) lies in [cmin, cmax], so ||p(mu) - q|| <= range sqrt(n) / mu and
  // h6 <= 0 once t >= n range^2 / eps^2; the first doubling probe lands there.
  const double range = inst.c.cmax() - inst.c.cmin();
  const double eps2 = inst.epsilon * inst.epsilon;
  const double t_hi = static_cast<double>(inst.q.size()) * range * range / eps2;
  const auto probe = find_sign_point(h, 0.5 * t_hi, std::nullopt, Sign::Negative);
  RootConfig newton_cfg = cfg;
  newton_cfg.f_scale = eps2;
  const double mu = std::sqrt(
      newton_guarded(h, probe.x, Shape::ConcaveDecreasing, newton_cfg, probe.opposite));
  const double lambda = eq.inner(mu).lambda_of_mu;

  const auto q = inst.q.weights();
  const auto c = inst.c.costs();
  r.p.resize(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    r.p[i] = std::max(q[i] - (lambda - c[i]) / mu, 0.0);
  }
  r.objective = dot(r.p, c);
  r.status = SolveStatus::RootFound;
  r.h_evaluations = h.evaluations();
  r.mu = mu;
  r.lambda = lambda;
  return r;
}

}  // namespace wcd
