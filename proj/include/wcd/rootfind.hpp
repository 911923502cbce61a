#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace wcd {

/// Scalar function h with an optional derivative and an evaluation counter.
/// The counter moves once per evaluation of h, whether or not the slope is
/// requested alongside. Not thread-safe; use one instance per solve.
class ScalarFn {
 public:
  using Value = std::function<double(double)>;
  using ValueSlope = std::function<std::pair<double, double>(double)>;

  explicit ScalarFn(Value value) : value_(std::move(value)) {}
  explicit ScalarFn(ValueSlope value_slope) : value_slope_(std::move(value_slope)) {}

  double operator()(double x);
  /// h(x) and h'(x); h' is the one-sided slope at kinks.
  std::pair<double, double> with_slope(double x);

  bool has_slope() const noexcept { return static_cast<bool>(value_slope_); }
  std::size_t evaluations() const noexcept { return evaluations_; }

 private:
  Value value_;
  ValueSlope value_slope_;
  std::size_t evaluations_ = 0;
};

struct RootConfig {
  double tol_x = 1e-12;
  double tol_f = 1e-10;
  int max_iter = 200;
  /// Natural magnitude of h; Newton stops once |h| <= tol_f * f_scale.
  double f_scale = 1.0;
};

struct BracketStep {
  double lo;
  double hi;
  double h_lo;
  double h_hi;
};

/// Bisection on (lo, hi]. The lower end is treated as open and evaluated at
/// lo + max(tol_x, tol_x * |lo|); its sign must differ from that of h(hi), in
/// either orientation. Iterates until the bracket is narrower than
/// tol_x * max(1, |lo|, |hi|), so the evaluation count depends on the bracket
/// only. `trace`, when given, receives the bracket after every step.
double bisect(ScalarFn& h, double lo, double hi, const RootConfig& cfg = {},
              std::vector<BracketStep>* trace = nullptr);

enum class Shape { ConvexDecreasing, ConcaveDecreasing };

/// Newton's method from a start whose sign matches the shape: h(x0) < 0 for a
/// concave decreasing h (iterates decrease to the root) and h(x0) > 0 for a
/// convex decreasing h (iterates increase). `fallback`, a point where h has
/// the opposite sign, enables a bisection fallback when the slope vanishes.
double newton_guarded(ScalarFn& h, double x0, Shape shape, const RootConfig& cfg = {},
                      std::optional<double> fallback = std::nullopt,
                      std::vector<double>* iterates = nullptr);

enum class Sign { Positive, Negative };

struct SignProbe {
  double x;
  /// Most recent probe with the opposite sign, if any.
  std::optional<double> opposite;
};

inline constexpr int kMaxProbes = 200;

/// With a barrier b, probes b + delta for delta = 1, 1/2, 1/4, ...; otherwise
/// probes start * 2^k for k = 1, 2, ... Returns the first probe with the
/// wanted sign.
SignProbe find_sign_point(ScalarFn& h, double start, std::optional<double> barrier, Sign want);

}  // namespace wcd
