#include "wcd/divergence.hpp"

#include <cmath>
#include <limits>

namespace wcd {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double phi(DivergenceKind kind, double t) {
  if (t < 0.0 || std::isnan(t)) {
    throw Error(ErrorCode::NegativeArgument, "phi is defined for t >= 0");
  }
  switch (kind) {
    case DivergenceKind::KL:
      return t == 0.0 ? 0.0 : t * std::log(t);
    case DivergenceKind::Burg:
      return t == 0.0 ? kInf : -std::log(t);
    case DivergenceKind::Hellinger: {
      const double r = std::sqrt(t) - 1.0;
      return r * r;
    }
    case DivergenceKind::ChiSq:
      return t == 0.0 ? kInf : (t - 1.0) * (t - 1.0) / t;
    case DivergenceKind::ModChiSq:
      return (t - 1.0) * (t - 1.0);
  }
  return kInf;
}

double divergence_term(DivergenceKind kind, double p, double q) {
  switch (kind) {
    case DivergenceKind::KL:
      return p == 0.0 ? 0.0 : p * std::log(p / q);
    case DivergenceKind::Burg:
      return p == 0.0 ? kInf : q * std::log(q / p);
    case DivergenceKind::Hellinger: {
      const double r = std::sqrt(p) - std::sqrt(q);
      return r * r;
    }
    case DivergenceKind::ChiSq:
      return p == 0.0 ? kInf : (p - q) * (p - q) / p;
    case DivergenceKind::ModChiSq:
      return (p - q) * (p - q) / q;
  }
  return kInf;
}

double divergence(DivergenceKind kind, std::span<const double> p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::DimensionMismatch, "p and q have different lengths");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0.0) {
      throw Error(ErrorCode::NegativeArgument, "p has a negative entry");
    }
    const double term = divergence_term(kind, p[i], q[i]);
    if (std::isinf(term)) return kInf;
    total += term;
  }
  return total;
}

}  // namespace wcd
