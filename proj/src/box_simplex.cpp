#include "wcd/box_simplex.hpp"

#include <algorithm>
#include <limits>

namespace wcd {

double h7(double lambda, const BoxSimplexInstance& inst) {
  double total = 0.0;
  for (std::size_t i = 0; i < inst.q.size(); ++i) {
    total += std::clamp(inst.q[i] - lambda, inst.l[i], inst.u[i]);
  }
  return total - 1.0;
}

SolverResult solve_box_simplex(const BoxSimplexInstance& inst) {
  const std::size_t n = inst.q.size();
  if (inst.l.size() != n || inst.u.size() != n || n == 0) {
    throw Error(ErrorCode::DimensionMismatch, "q, l and u must have equal non-zero lengths");
  }
  if (compensated_sum(inst.l) > 1.0 || compensated_sum(inst.u) < 1.0) {
    throw Error(ErrorCode::InfeasibleBounds, "sum(l) <= 1 <= sum(u) violated");
  }

  std::vector<double> s(n), r(n);
  for (std::size_t k = 0; k < n; ++k) {
    s[k] = inst.q[k] - inst.l[k];
    r[k] = inst.q[k] - inst.u[k];
  }
  std::sort(s.begin(), s.end());
  std::sort(r.begin(), r.end());

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::size_t i = 0;  // next s-kink
  std::size_t j = 1;  // next r-kink
  double slope = 1.0;
  double lambda = r[0];
  double g = compensated_sum(inst.u) - 1.0;
  double prev_lambda = lambda;
  double prev_g = g;

  while (g > 0.0 && i < n) {
    prev_lambda = lambda;
    prev_g = g;
    const double next_r = j < n ? r[j] : kInf;
    if (next_r <= s[i]) {
      g -= slope * (next_r - lambda);
      slope += 1.0;
      lambda = next_r;
      ++j;
    } else {
      g -= slope * (s[i] - lambda);
      slope -= 1.0;
      lambda = s[i];
      ++i;
    }
  }

  double root = lambda;
  if (g < 0.0) {
    root = prev_lambda + prev_g * (lambda - prev_lambda) / (prev_g - g);
  }

  SolverResult result;
  result.p.resize(n);
  double dist2 = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    result.p[k] = std::clamp(inst.q[k] - root, inst.l[k], inst.u[k]);
    dist2 += (result.p[k] - inst.q[k]) * (result.p[k] - inst.q[k]);
  }
  result.lambda = root;
  result.status = SolveStatus::RootFound;
  result.objective = 0.5 * dist2;
  return result;
}

}  // namespace wcd
