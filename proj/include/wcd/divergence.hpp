#pragma once

#include <span>

#include "wcd/core.hpp"

namespace wcd {

/// Generating function phi(t) for t >= 0. Boundary values: KL gives 0 at
/// t = 0, Burg and chi-square give +inf, Hellinger and modified chi-square 1.
double phi(DivergenceKind kind, double t);

/// Per-coordinate contribution q * phi(p / q) written in closed form, so that
/// p = 0 is handled without dividing by zero.
double divergence_term(DivergenceKind kind, double p, double q);

/// sum_i q_i phi(p_i / q_i). Returns +inf (never NaN) when some term is
/// infinite, e.g. Burg or chi-square with a zero p_i.
double divergence(DivergenceKind kind, std::span<const double> p, const Distribution& q);

}  // namespace wcd
