#pragma once

#include <span>
#include <utility>
#include <vector>

#include "wcd/core.hpp"
#include "wcd/rootfind.hpp"

namespace wcd {

/// Mass of q spread proportionally over the argmax set of c, zero elsewhere.
/// This maximizes c'p whenever the divergence ball contains it.
std::vector<double> trivial_candidate(const Distribution& q, const CostVector& c);

/// divergence(kind, p_hat, q) <= epsilon. Boundary equality counts as trivial.
bool trivial_check(DivergenceKind kind, std::span<const double> p_hat, const Distribution& q,
                   double epsilon);

/// Scalar equation whose root yields the worst-case distribution.
///
/// The variable is mu > 0 for KL and lambda for the rest: lambda > cmax for
/// Burg, Hellinger and chi-square, lambda >= -cmax for modified chi-square.
/// KL is evaluated in the overflow-free form
///   sum_i w_i ((c_i - cmax)/mu - log sum_j w_j - eps),  w_i = q_i exp((c_i - cmax)/mu),
/// which equals the textbook h_1 divided by exp(cmax/mu) and so has the same
/// sign and root.
double h_eval(DivergenceKind kind, double x, const DroInstance& inst);

/// (h, h') for the two Newton-solved kinds (chi-square and modified
/// chi-square). The modified chi-square slope is one-sided at kinks.
std::pair<double, double> h_value_slope(DivergenceKind kind, double x, const DroInstance& inst);

struct Bracket {
  double lo;  // open end
  double hi;  // inclusive; +inf when unbounded
};

/// Interval known to contain the root when the trivial check fails.
Bracket bracket(DivergenceKind kind, const DroInstance& inst);

/// Normalized worst-case distribution recovered from a root of h.
std::vector<double> weights(DivergenceKind kind, double root, const DroInstance& inst);

enum class EquationVariable { Mu, Lambda };

struct PhiSolveTrace {
  bool used_trivial = false;
  EquationVariable variable = EquationVariable::Lambda;
  double root = 0.0;
  Bracket bracket{0.0, 0.0};
  std::size_t h_evaluations = 0;
};

/// Worst case over a phi-divergence ball. Bisection on the bracket for KL,
/// Burg and Hellinger; guarded Newton for chi-square (convex, started next to
/// cmax) and modified chi-square (concave, started by doubling).
SolverResult solve_dro_phi(const DroInstance& inst, const RootConfig& cfg = {},
                           PhiSolveTrace* trace = nullptr);

/// Magnitude used to make |h(root)| comparable across kinds.
double h_scale(DivergenceKind kind, double x, const DroInstance& inst);

}  // namespace wcd
