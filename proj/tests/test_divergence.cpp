#include "doctest.h"
#include "wcd/divergence.hpp"

#include <cmath>
#include <limits>
#include <random>

using namespace wcd;

namespace {

constexpr DivergenceKind kKinds[] = {DivergenceKind::KL, DivergenceKind::Burg,
                                     DivergenceKind::Hellinger, DivergenceKind::ChiSq,
                                     DivergenceKind::ModChiSq};

std::vector<double> random_simplex_point(std::mt19937_64& rng, std::size_t n) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> p(n);
  double s = 0.0;
  for (double& v : p) s += (v = e(rng));
  for (double& v : p) v /= s;
  return p;
}

// Table formula d(p, q) per coordinate, written independently of divergence_term.
double table_formula(DivergenceKind k, double p, double q) {
  switch (k) {
    case DivergenceKind::KL: return p * std::log(p / q);
    case DivergenceKind::Burg: return q * std::log(q / p);
    case DivergenceKind::Hellinger: return std::pow(std::sqrt(p) - std::sqrt(q), 2);
    case DivergenceKind::ChiSq: return std::pow(p - q, 2) / p;
    case DivergenceKind::ModChiSq: return std::pow(p - q, 2) / q;
  }
  return 0.0;
}

}  // namespace

TEST_CASE("phi values") {
  for (auto k : kKinds) CHECK(phi(k, 1.0) == 0.0);
  CHECK(phi(DivergenceKind::Hellinger, 4.0) == doctest::Approx(1.0));
  CHECK(phi(DivergenceKind::ModChiSq, 3.0) == doctest::Approx(4.0));

  const double inf = std::numeric_limits<double>::infinity();
  CHECK(phi(DivergenceKind::KL, 0.0) == 0.0);
  CHECK(phi(DivergenceKind::Burg, 0.0) == inf);
  CHECK(phi(DivergenceKind::Hellinger, 0.0) == 1.0);
  CHECK(phi(DivergenceKind::ChiSq, 0.0) == inf);
  CHECK(phi(DivergenceKind::ModChiSq, 0.0) == 1.0);

  CHECK_THROWS_AS(phi(DivergenceKind::KL, -0.1), Error);
}

TEST_CASE("phi is convex at sampled points") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 5.0), th(0.0, 1.0);
  for (auto k : kKinds) {
    for (int i = 0; i < 2000; ++i) {
      double a = u(rng), b = u(rng);
      if (a > b) std::swap(a, b);
      if (a == b) continue;
      const double t = th(rng);
      const double lhs = phi(k, t * a + (1 - t) * b);
      const double rhs = t * phi(k, a) + (1 - t) * phi(k, b);
      CHECK(lhs <= rhs + 1e-12);
    }
  }
}

TEST_CASE("divergence examples") {
  const auto q = validate_distribution({0.5, 0.5});
  const std::vector<double> vertex{1.0, 0.0};
  for (auto k : kKinds) CHECK(divergence(k, q.weights(), q) == 0.0);
  CHECK(divergence(DivergenceKind::KL, vertex, q) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(std::isinf(divergence(DivergenceKind::Burg, vertex, q)));
  CHECK(std::isinf(divergence(DivergenceKind::ChiSq, vertex, q)));
  CHECK(divergence(DivergenceKind::Hellinger, vertex, q) ==
        doctest::Approx(2.0 - 2.0 * std::sqrt(0.5)));
  CHECK(divergence(DivergenceKind::ModChiSq, vertex, q) == doctest::Approx(1.0));

  const std::vector<double> short_p{1.0};
  CHECK_THROWS_AS(divergence(DivergenceKind::KL, short_p, q), Error);
}

TEST_CASE("divergence is non-negative, zero only at q, and matches the table formula") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const auto q = validate_distribution([&] {
      auto w = random_simplex_point(rng, n);
      return w;
    }());
    const auto p = random_simplex_point(rng, n);
    for (auto k : kKinds) {
      const double d = divergence(k, p, q);
      CHECK(d > 0.0);
      double via_table = 0.0;
      for (std::size_t i = 0; i < n; ++i) via_table += table_formula(k, p[i], q[i]);
      double via_phi = 0.0;
      for (std::size_t i = 0; i < n; ++i) via_phi += q[i] * phi(k, p[i] / q[i]);
      CHECK(d == doctest::Approx(via_table).epsilon(1e-10));
      CHECK(std::abs(via_phi - via_table) <= 1e-10 * std::max(1.0, std::abs(via_table)));
    }
  }
}
