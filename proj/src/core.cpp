#include "wcd/core.hpp"

#include <algorithm>
#include <cmath>

namespace wcd {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidRadius: return "InvalidRadius";
    case ErrorCode::InvalidBounds: return "InvalidBounds";
    case ErrorCode::InfeasibleBounds: return "InfeasibleBounds";
    case ErrorCode::NegativeArgument: return "NegativeArgument";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DegenerateFit: return "DegenerateFit";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::MaxIterExceeded: return "MaxIterExceeded";
    case ErrorCode::WrongStartSign: return "WrongStartSign";
    case ErrorCode::ZeroDerivative: return "ZeroDerivative";
    case ErrorCode::MaxProbesExceeded: return "MaxProbesExceeded";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoSignChange:
    case ErrorCode::MaxIterExceeded:
    case ErrorCode::WrongStartSign:
    case ErrorCode::ZeroDerivative:
    case ErrorCode::MaxProbesExceeded:
      return false;
    default:
      return true;
  }
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

double compensated_sum(std::span<const double> values) {
  double sum = 0.0;
  double comp = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

Distribution validate_distribution(std::vector<double> w) {
  if (w.size() < 2) {
    throw Error(ErrorCode::TooShort, "a distribution needs at least two weights");
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!(w[i] > 0.0) || !std::isfinite(w[i])) {
      throw Error(ErrorCode::NonPositiveWeight,
                  "weight " + std::to_string(i) + " is not strictly positive");
    }
  }
  const double total = compensated_sum(w);
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw Error(ErrorCode::NotNormalized, "weights sum to " + std::to_string(total));
  }
  return Distribution(std::move(w));
}

CostVector cost_stats(std::vector<double> c) {
  if (c.size() < 2) {
    throw Error(ErrorCode::TooShort, "cost vector needs at least two entries");
  }
  for (double v : c) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::DomainViolation, "costs must be finite");
    }
  }
  CostVector out;
  const auto [mn, mx] = std::minmax_element(c.begin(), c.end());
  out.cmin_ = *mn;
  out.cmax_ = *mx;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == out.cmax_) out.argmax_.push_back(i);
  }
  out.costs_ = std::move(c);
  return out;
}

std::optional<DivergenceKind> as_divergence(Distance d) {
  switch (d) {
    case Distance::KL: return DivergenceKind::KL;
    case Distance::Burg: return DivergenceKind::Burg;
    case Distance::Hellinger: return DivergenceKind::Hellinger;
    case Distance::ChiSq: return DivergenceKind::ChiSq;
    case Distance::ModChiSq: return DivergenceKind::ModChiSq;
    default: return std::nullopt;
  }
}

Distance to_distance(DivergenceKind k) {
  switch (k) {
    case DivergenceKind::KL: return Distance::KL;
    case DivergenceKind::Burg: return Distance::Burg;
    case DivergenceKind::Hellinger: return Distance::Hellinger;
    case DivergenceKind::ChiSq: return Distance::ChiSq;
    case DivergenceKind::ModChiSq: return Distance::ModChiSq;
  }
  return Distance::KL;
}

DroInstance make_dro_instance(std::vector<double> q, std::vector<double> c,
                              double epsilon, Distance distance) {
  if (q.size() != c.size()) {
    throw Error(ErrorCode::DimensionMismatch, "q and c have different lengths");
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorCode::InvalidRadius, "epsilon must be positive and finite");
  }
  if (distance == Distance::Hellinger && epsilon >= 2.0) {
    throw Error(ErrorCode::InvalidRadius, "Hellinger radius must be below 2");
  }
  auto dist = validate_distribution(std::move(q));
  auto costs = cost_stats(std::move(c));
  return DroInstance{std::move(dist), std::move(costs), epsilon, distance};
}

BoxSimplexInstance make_box_simplex_instance(std::vector<double> q,
                                             std::vector<double> l,
                                             std::vector<double> u) {
  if (q.size() != l.size() || q.size() != u.size()) {
    throw Error(ErrorCode::DimensionMismatch, "q, l and u must have equal lengths");
  }
  if (q.empty()) {
    throw Error(ErrorCode::TooShort, "empty projection problem");
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!std::isfinite(q[i]) || !std::isfinite(l[i]) || !std::isfinite(u[i])) {
      throw Error(ErrorCode::DomainViolation, "non-finite input at index " + std::to_string(i));
    }
    if (l[i] > u[i]) {
      throw Error(ErrorCode::InvalidBounds, "l > u at index " + std::to_string(i));
    }
  }
  if (compensated_sum(l) > 1.0 || compensated_sum(u) < 1.0) {
    throw Error(ErrorCode::InfeasibleBounds, "sum(l) <= 1 <= sum(u) violated");
  }
  return BoxSimplexInstance{std::move(q), std::move(l), std::move(u)};
}

std::string_view status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::TrivialCase: return "TrivialCase";
    case SolveStatus::RootFound: return "RootFound";
    case SolveStatus::DegenerateObjective: return "DegenerateObjective";
    case SolveStatus::ExactSweep: return "ExactSweep";
  }
  return "Unknown";
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::KL: return "kl";
    case Method::Burg: return "burg";
    case Method::Hellinger: return "hellinger";
    case Method::ChiSq: return "chi2";
    case Method::ModChiSq: return "mchi2";
    case Method::L1: return "l1";
    case Method::L2: return "l2";
    case Method::Linf: return "linf";
    case Method::Simplex: return "simplex";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (method_name(m) == name) return m;
  }
  throw Error(ErrorCode::ParseError, "unknown method '" + std::string(name) + "'");
}

std::optional<Distance> method_distance(Method m) {
  switch (m) {
    case Method::KL: return Distance::KL;
    case Method::Burg: return Distance::Burg;
    case Method::Hellinger: return Distance::Hellinger;
    case Method::ChiSq: return Distance::ChiSq;
    case Method::ModChiSq: return Distance::ModChiSq;
    case Method::L1: return Distance::L1;
    case Method::L2: return Distance::L2;
    case Method::Linf: return Distance::Linf;
    case Method::Simplex: return std::nullopt;
  }
  return std::nullopt;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace wcd
