#include "wcd/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wcd/core.hpp"

namespace wcd {

double ScalarFn::operator()(double x) {
  ++evaluations_;
  if (value_) return value_(x);
  return value_slope_(x).first;
}

std::pair<double, double> ScalarFn::with_slope(double x) {
  if (!value_slope_) {
    throw Error(ErrorCode::DomainViolation, "function has no derivative");
  }
  ++evaluations_;
  return value_slope_(x);
}

namespace {

bool positive(double v) { return v > 0.0; }

}  // namespace

double bisect(ScalarFn& h, double lo, double hi, const RootConfig& cfg,
              std::vector<BracketStep>* trace) {
  if (!(lo < hi) || !std::isfinite(hi)) {
    throw Error(ErrorCode::NoSignChange, "bisection needs a finite bracket lo < hi");
  }
  double a = lo + std::max(cfg.tol_x, cfg.tol_x * std::abs(lo));
  double b = hi;
  double fa = h(a);
  double fb = h(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (std::isnan(fa) || std::isnan(fb) || positive(fa) == positive(fb)) {
    throw Error(ErrorCode::NoSignChange,
                "h(lo+) = " + std::to_string(fa) + ", h(hi) = " + std::to_string(fb));
  }
  const double width_tol = cfg.tol_x * std::max({1.0, std::abs(lo), std::abs(hi)});
  if (trace) trace->push_back({a, b, fa, fb});

  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    if (b - a <= width_tol) return a + 0.5 * (b - a);
    const double mid = a + 0.5 * (b - a);
    const double fm = h(mid);
    if (fm == 0.0) return mid;
    if (positive(fm) == positive(fa)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
      fb = fm;
    }
    if (trace) trace->push_back({a, b, fa, fb});
  }
  if (b - a <= width_tol) return a + 0.5 * (b - a);
  throw Error(ErrorCode::MaxIterExceeded, "bisection did not reach the bracket tolerance");
}

double newton_guarded(ScalarFn& h, double x0, Shape shape, const RootConfig& cfg,
                      std::optional<double> fallback, std::vector<double>* iterates) {
  const bool concave = shape == Shape::ConcaveDecreasing;
  double x = x0;
  auto [f, df] = h.with_slope(x);
  if (f == 0.0) return x;
  if (concave ? !(f < 0.0) : !(f > 0.0)) {
    throw Error(ErrorCode::WrongStartSign,
                std::string("start has h = ") + std::to_string(f) +
                    (concave ? ", need h < 0" : ", need h > 0"));
  }
  if (iterates) iterates->push_back(x);
  const double f_tol = cfg.tol_f * cfg.f_scale;

  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    if (std::abs(f) <= f_tol) return x;
    // Both shapes are decreasing, so a usable slope is strictly negative.
    if (!(df <= -1e-300)) {
      if (fallback) {
        return bisect(h, std::min(x, *fallback), std::max(x, *fallback), cfg);
      }
      throw Error(ErrorCode::ZeroDerivative, "no negative slope at x = " + std::to_string(x));
    }
    const double next = x - f / df;
    // The step leaves the monotone direction only once rounding dominates.
    if (concave ? !(next < x) : !(next > x)) return x;
    const double step = std::abs(next - x);
    x = next;
    std::tie(f, df) = h.with_slope(x);
    if (iterates) iterates->push_back(x);
    if (f == 0.0 || step <= cfg.tol_x * (1.0 + std::abs(x))) return x;
  }
  throw Error(ErrorCode::MaxIterExceeded, "Newton iteration did not converge");
}

SignProbe find_sign_point(ScalarFn& h, double start, std::optional<double> barrier, Sign want) {
  const bool want_positive = want == Sign::Positive;
  std::optional<double> opposite;
  double delta = 1.0;
  double x = start;
  for (int k = 0; k < kMaxProbes; ++k) {
    if (barrier) {
      x = *barrier + delta;
      delta *= 0.5;
    } else {
      x *= 2.0;
    }
    const double v = h(x);
    if (want_positive ? v > 0.0 : v < 0.0) return {x, opposite};
    opposite = x;
  }
  throw Error(ErrorCode::MaxProbesExceeded, "no point with the wanted sign");
}

}  // namespace wcd
