#include "wcd/dro.hpp"

#include <algorithm>
#include <cmath>

#include "wcd/divergence.hpp"
#include "wcd/dro_norm.hpp"
#include "wcd/dro_phi.hpp"

namespace wcd {

double ball_distance(Distance distance, std::span<const double> p, const Distribution& q) {
  if (auto kind = as_divergence(distance)) return divergence(*kind, p, q);
  if (p.size() != q.size()) {
    throw Error(ErrorCode::DimensionMismatch, "p and q have different lengths");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = std::abs(p[i] - q[i]);
    switch (distance) {
      case Distance::L1: acc += d; break;
      case Distance::L2: acc += d * d; break;
      default: acc = std::max(acc, d); break;
    }
  }
  return distance == Distance::L2 ? std::sqrt(acc) : acc;
}

SolverResult solve_dro(const DroInstance& inst, const RootConfig& cfg) {
  switch (inst.distance) {
    case Distance::L1: return solve_l1(inst);
    case Distance::L2: return solve_l2(inst, cfg);
    case Distance::Linf: return solve_linf(inst);
    default: return solve_dro_phi(inst, cfg);
  }
}

double root_residual(const DroInstance& inst, const SolverResult& result) {
  if (result.status != SolveStatus::RootFound) return 0.0;
  if (inst.distance == Distance::L2) {
    const double mu = result.mu.value();
    return std::abs(h6(mu, inst)) / std::max(1.0, mu * mu);
  }
  const auto kind = as_divergence(inst.distance);
  if (!kind) return 0.0;
  const double x = *kind == DivergenceKind::KL ? result.mu.value() : result.lambda.value();
  return std::abs(h_eval(*kind, x, inst)) / std::max(1.0, h_scale(*kind, x, inst));
}

}  // namespace wcd
