#pragma once

#include <span>

#include "wcd/core.hpp"
#include "wcd/rootfind.hpp"

namespace wcd {

/// Distance of p from q as measured by the instance's ball: a phi-divergence
/// or an l1 / l2 / l-infinity norm of p - q.
double ball_distance(Distance distance, std::span<const double> p, const Distribution& q);

/// Worst-case distribution for any supported ball.
SolverResult solve_dro(const DroInstance& inst, const RootConfig& cfg = {});

/// Scaled residual |h(root)| / max(1, natural magnitude of h) for results
/// with status RootFound; 0 otherwise and for the exact sweeps.
double root_residual(const DroInstance& inst, const SolverResult& result);

}  // namespace wcd
