#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wcd {

enum class ErrorCode {
  // input validation
  NonPositiveWeight,
  NotNormalized,
  TooShort,
  DimensionMismatch,
  InvalidRadius,
  InvalidBounds,
  InfeasibleBounds,
  NegativeArgument,
  DomainViolation,
  TooLarge,
  DegenerateFit,
  ParseError,
  // numerical failure
  NoSignChange,
  MaxIterExceeded,
  WrongStartSign,
  ZeroDerivative,
  MaxProbesExceeded,
};

std::string_view error_code_name(ErrorCode code);

/// True for codes caused by bad input rather than a failed iteration.
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Neumaier-compensated sum.
double compensated_sum(std::span<const double> values);

/// Nominal distribution: strictly positive weights summing to one.
class Distribution {
 public:
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const noexcept { return weights_[i]; }

 private:
  friend Distribution validate_distribution(std::vector<double> w);
  explicit Distribution(std::vector<double> w) : weights_(std::move(w)) {}
  std::vector<double> weights_;
};

inline constexpr double kNormalizationTolerance = 1e-12;

Distribution validate_distribution(std::vector<double> w);

/// Payoff vector with the statistics every solver needs. The argmax set is
/// collected by exact floating-point equality.
class CostVector {
 public:
  std::span<const double> costs() const noexcept { return costs_; }
  std::size_t size() const noexcept { return costs_.size(); }
  double operator[](std::size_t i) const noexcept { return costs_[i]; }
  double cmax() const noexcept { return cmax_; }
  double cmin() const noexcept { return cmin_; }
  /// 0-based indices i with c[i] == cmax.
  std::span<const std::size_t> argmax_set() const noexcept { return argmax_; }
  /// Every cost equal; the DRO objective is then constant.
  bool constant() const noexcept { return cmax_ == cmin_; }

 private:
  friend CostVector cost_stats(std::vector<double> c);
  CostVector() = default;
  std::vector<double> costs_;
  double cmax_ = 0.0;
  double cmin_ = 0.0;
  std::vector<std::size_t> argmax_;
};

CostVector cost_stats(std::vector<double> c);

enum class Distance { KL, Burg, Hellinger, ChiSq, ModChiSq, L1, L2, Linf };

/// The five generating functions of the supported phi-divergences.
enum class DivergenceKind { KL, Burg, Hellinger, ChiSq, ModChiSq };

std::optional<DivergenceKind> as_divergence(Distance d);
Distance to_distance(DivergenceKind k);

struct DroInstance {
  Distribution q;
  CostVector c;
  double epsilon;
  Distance distance;
};

/// Checks dimensions and radius (epsilon > 0, and epsilon < 2 for Hellinger).
DroInstance make_dro_instance(std::vector<double> q, std::vector<double> c,
                              double epsilon, Distance distance);

/// Projection target q with bounds l <= p <= u; q need not be a distribution.
struct BoxSimplexInstance {
  std::vector<double> q;
  std::vector<double> l;
  std::vector<double> u;
};

/// Throws InvalidBounds when some l[i] > u[i] and InfeasibleBounds when
/// sum(l) > 1 or sum(u) < 1.
BoxSimplexInstance make_box_simplex_instance(std::vector<double> q,
                                             std::vector<double> l,
                                             std::vector<double> u);

enum class SolveStatus {
  TrivialCase,
  RootFound,
  DegenerateObjective,
  ExactSweep,
};

std::string_view status_name(SolveStatus s);

struct SolverResult {
  std::vector<double> p;
  std::optional<double> lambda;
  std::optional<double> mu;
  SolveStatus status = SolveStatus::RootFound;
  std::size_t h_evaluations = 0;
  /// c'p for DRO problems, 0.5 * ||p - q||^2 for the box simplex.
  double objective = 0.0;
};

/// Every solvable problem, as named on the command line.
enum class Method { KL, Burg, Hellinger, ChiSq, ModChiSq, L1, L2, Linf, Simplex };

inline constexpr Method kAllMethods[] = {
    Method::KL, Method::Burg, Method::Hellinger, Method::ChiSq, Method::ModChiSq,
    Method::L1, Method::L2,   Method::Linf,      Method::Simplex};

std::string_view method_name(Method m);
Method parse_method(std::string_view name);
std::optional<Distance> method_distance(Method m);

double dot(std::span<const double> a, std::span<const double> b);

}  // namespace wcd
