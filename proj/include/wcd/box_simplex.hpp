#pragma once

#include "wcd/core.hpp"

namespace wcd {

/// sum_i clip(q_i - lambda, l_i, u_i) - 1; piecewise linear, non-increasing.
double h7(double lambda, const BoxSimplexInstance& inst);

/// Euclidean projection of q onto {p : sum p = 1, l <= p <= u}.
///
/// Sorts s = q - l and r = q - u, then walks the kinks of h7 from
/// lambda = min(r), where h7 = sum(u) - 1 >= 0, tracking the slope (number of
/// coordinates strictly inside their bounds). The walk stops at the first
/// kink with h7 <= 0 and interpolates linearly on the last piece. When r and
/// s kinks coincide the r-kink is taken first.
SolverResult solve_box_simplex(const BoxSimplexInstance& inst);

}  // namespace wcd
