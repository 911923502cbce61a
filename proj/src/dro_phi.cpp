#include "wcd/dro_phi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wcd/divergence.hpp"

namespace wcd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_domain(DivergenceKind kind, double x, const DroInstance& inst) {
  const double cmax = inst.c.cmax();
  bool ok = false;
  switch (kind) {
    case DivergenceKind::KL: ok = x > 0.0; break;
    case DivergenceKind::Burg:
    case DivergenceKind::Hellinger:
    case DivergenceKind::ChiSq: ok = x > cmax; break;
    case DivergenceKind::ModChiSq: ok = x >= -cmax; break;
  }
  if (!ok || !std::isfinite(x)) {
    throw Error(ErrorCode::DomainViolation, "h evaluated outside its domain at " + std::to_string(x));
  }
}

struct KlSums {
  double w_total = 0.0;
  double weighted_shift = 0.0;  // sum_i w_i (c_i - cmax) / mu
};

KlSums kl_sums(double mu, const DroInstance& inst) {
  const auto q = inst.q.weights();
  const auto c = inst.c.costs();
  const double cmax = inst.c.cmax();
  KlSums s;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double z = (c[i] - cmax) / mu;
    const double w = q[i] * std::exp(z);
    s.w_total += w;
    s.weighted_shift += w * z;
  }
  return s;
}

}  // namespace

std::vector<double> trivial_candidate(const Distribution& q, const CostVector& c) {
  std::vector<double> p(q.size(), 0.0);
  double mass = 0.0;
  for (std::size_t i : c.argmax_set()) mass += q[i];
  for (std::size_t i : c.argmax_set()) p[i] = q[i] / mass;
  return p;
}

bool trivial_check(DivergenceKind kind, std::span<const double> p_hat, const Distribution& q,
                   double epsilon) {
  return divergence(kind, p_hat, q) <= epsilon;
}

double h_eval(DivergenceKind kind, double x, const DroInstance& inst) {
  require_domain(kind, x, inst);
  const auto q = inst.q.weights();
  const auto c = inst.c.costs();
  const double eps = inst.epsilon;
  switch (kind) {
    case DivergenceKind::KL: {
      // sum_i w_i (z_i - log W - eps) = sum_i w_i z_i - W (log W + eps)
      const auto s = kl_sums(x, inst);
      return s.weighted_shift - s.w_total * (std::log(s.w_total) + eps);
    }
    case DivergenceKind::Burg: {
      double log_sum = 0.0;
      double inv_sum = 0.0;
      for (std::size_t i = 0; i < q.size(); ++i) {
        const double d = x - c[i];
        log_sum += q[i] * std::log(d);
        inv_sum += q[i] / d;
      }
      return log_sum + std::log(inv_sum) - eps;
    }
    case DivergenceKind::Hellinger: {
      double inv_sum = 0.0;
      double inv_sq_sum = 0.0;
      for (std::size_t i = 0; i < q.size(); ++i) {
        const double r = 1.0 / (x - c[i]);
        inv_sum += q[i] * r;
        inv_sq_sum += q[i] * r * r;
      }
      return 2.0 * inv_sum - (2.0 - eps) * std::sqrt(inv_sq_sum);
    }
    case DivergenceKind::ChiSq:
    case DivergenceKind::ModChiSq:
      return h_value_slope(kind, x, inst).first;
  }
  return 0.0;
}

std::pair<double, double> h_value_slope(DivergenceKind kind, double x, const DroInstance& inst) {
  require_domain(kind, x, inst);
  const auto q = inst.q.weights();
  const auto c = inst.c.costs();
  const double eps = inst.epsilon;
  if (kind == DivergenceKind::ChiSq) {
    // h = A B - 1 - eps,  h' = B^2/2 - A C/2
    double a = 0.0, b = 0.0, cc = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      const double d = x - c[i];
      const double root = std::sqrt(d);
      a += q[i] * root;
      b += q[i] / root;
      cc += q[i] / (root * d);
    }
    return {a * b - 1.0 - eps, 0.5 * (b * b - a * cc)};
  }
  if (kind == DivergenceKind::ModChiSq) {
    double s1 = 0.0, s2 = 0.0, active_mass = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      const double m = c[i] + x;
      if (m > 0.0) {
        s1 += q[i] * m;
        s2 += q[i] * m * m;
        active_mass += q[i];
      }
    }
    return {s2 - (1.0 + eps) * s1 * s1, 2.0 * s1 * (1.0 - (1.0 + eps) * active_mass)};
  }
  throw Error(ErrorCode::DomainViolation, "no analytic slope for this divergence");
}

Bracket bracket(DivergenceKind kind, const DroInstance& inst) {
  const double cmax = inst.c.cmax();
  const double range = cmax - inst.c.cmin();
  const double eps = inst.epsilon;
  switch (kind) {
    case DivergenceKind::KL: return {0.0, range / eps};
    case DivergenceKind::Burg: return {cmax, cmax + range / eps};
    case DivergenceKind::Hellinger: return {cmax, cmax + (2.0 - eps) * range / eps};
    case DivergenceKind::ChiSq: return {cmax, kInf};
    case DivergenceKind::ModChiSq: return {-cmax, kInf};
  }
  return {0.0, kInf};
}

std::vector<double> weights(DivergenceKind kind, double root, const DroInstance& inst) {
  if (kind == DivergenceKind::ModChiSq && !(root > -inst.c.cmax())) {
    throw Error(ErrorCode::DomainViolation, "all modified chi-square weights vanish");
  }
  require_domain(kind, root, inst);
  const auto q = inst.q.weights();
  const auto c = inst.c.costs();
  const double cmax = inst.c.cmax();
  std::vector<double> p(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double d = root - c[i];
    switch (kind) {
      case DivergenceKind::KL: p[i] = q[i] * std::exp((c[i] - cmax) / root); break;
      case DivergenceKind::Burg: p[i] = q[i] / d; break;
      case DivergenceKind::Hellinger: p[i] = q[i] / (d * d); break;
      case DivergenceKind::ChiSq: p[i] = q[i] / std::sqrt(d); break;
      case DivergenceKind::ModChiSq: p[i] = q[i] * std::max(c[i] + root, 0.0); break;
    }
  }
  const double total = compensated_sum(p);
  for (double& v : p) v /= total;
  return p;
}

double h_scale(DivergenceKind kind, double x, const DroInstance& inst) {
  const auto q = inst.q.weights();
  const auto c = inst.c.costs();
  switch (kind) {
    case DivergenceKind::KL: return kl_sums(x, inst).w_total;
    case DivergenceKind::Burg: return 1.0;
    case DivergenceKind::Hellinger: {
      double inv_sum = 0.0;
      for (std::size_t i = 0; i < q.size(); ++i) inv_sum += q[i] / (x - c[i]);
      return 2.0 * inv_sum;
    }
    case DivergenceKind::ChiSq: return 1.0 + inst.epsilon;
    case DivergenceKind::ModChiSq: {
      double s1 = 0.0;
      for (std::size_t i = 0; i < q.size(); ++i) s1 += q[i] * std::max(c[i] + x, 0.0);
      return s1 * s1;
    }
  }
  return 1.0;
}

SolverResult solve_dro_phi(const DroInstance& inst, const RootConfig& cfg, PhiSolveTrace* trace) {
  const auto kind_opt = as_divergence(inst.distance);
  if (!kind_opt) {
    throw Error(ErrorCode::DomainViolation, "instance distance is not a phi-divergence");
  }
  const DivergenceKind kind = *kind_opt;
  const auto c = inst.c.costs();
  SolverResult result;

  if (inst.c.constant()) {
    result.p.assign(inst.q.weights().begin(), inst.q.weights().end());
    result.status = SolveStatus::DegenerateObjective;
    result.objective = inst.c.cmax();
    return result;
  }

  auto p_hat = trivial_candidate(inst.q, inst.c);
  if (trivial_check(kind, p_hat, inst.q, inst.epsilon)) {
    result.objective = dot(p_hat, c);
    result.p = std::move(p_hat);
    result.status = SolveStatus::TrivialCase;
    if (trace) trace->used_trivial = true;
    return result;
  }

  const Bracket br = bracket(kind, inst);
  double root = 0.0;
  std::size_t evaluations = 0;
  switch (kind) {
    case DivergenceKind::KL:
    case DivergenceKind::Burg:
    case DivergenceKind::Hellinger: {
      ScalarFn h([&](double x) { return h_eval(kind, x, inst); });
      root = bisect(h, br.lo, br.hi, cfg);
      evaluations = h.evaluations();
      break;
    }
    case DivergenceKind::ChiSq: {
      ScalarFn h([&](double x) { return h_value_slope(kind, x, inst); });
      const auto probe = find_sign_point(h, inst.c.cmax(), inst.c.cmax(), Sign::Positive);
      root = newton_guarded(h, probe.x, Shape::ConvexDecreasing, cfg, probe.opposite);
      evaluations = h.evaluations();
      break;
    }
    case DivergenceKind::ModChiSq: {
      ScalarFn h([&](double x) { return h_value_slope(kind, x, inst); });
      const double start = std::max(1.0, -inst.c.cmin() + 1.0);
      const auto probe = find_sign_point(h, start, std::nullopt, Sign::Negative);
      RootConfig newton_cfg = cfg;
      newton_cfg.f_scale = h_scale(kind, probe.x, inst);
      root = newton_guarded(h, probe.x, Shape::ConcaveDecreasing, newton_cfg, probe.opposite);
      evaluations = h.evaluations();
      break;
    }
  }

  result.p = weights(kind, root, inst);
  result.objective = dot(result.p, c);
  result.status = SolveStatus::RootFound;
  result.h_evaluations = evaluations;
  if (kind == DivergenceKind::KL) {
    result.mu = root;
  } else {
    result.lambda = root;
  }
  if (trace) {
    trace->used_trivial = false;
    trace->variable = kind == DivergenceKind::KL ? EquationVariable::Mu : EquationVariable::Lambda;
    trace->root = root;
    trace->bracket = br;
    trace->h_evaluations = evaluations;
  }
  return result;
}

}  // namespace wcd
