#include "doctest.h"
#include "wcd/bench.hpp"
#include "wcd/dro.hpp"
#include "wcd/dro_norm.hpp"

#include <cmath>
#include <random>

using namespace wcd;

namespace {

DroInstance random_instance(std::uint64_t seed, std::size_t n, double eps, Distance d) {
  auto g = generate_instance(n, seed);
  return make_dro_instance(std::move(g.q), std::move(g.c), eps, d);
}

double linf(std::span<const double> p, std::span<const double> q) {
  double m = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) m = std::max(m, std::abs(p[i] - q[i]));
  return m;
}

double l1(std::span<const double> p, std::span<const double> q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
  return s;
}

}  // namespace

TEST_CASE("l-infinity sweep examples") {
  const std::vector<double> q{0.5, 0.5}, c{1.0, 0.0};
  auto p = sweep_linf(q, c, 0.2);
  CHECK(p[0] == doctest::Approx(0.7));
  CHECK(p[1] == doctest::Approx(0.3));
  p = sweep_linf(q, c, 0.6);
  CHECK(p[0] == doctest::Approx(1.0));
  CHECK(p[1] == doctest::Approx(0.0));
  CHECK(sweep_linf(q, c, 0.0) == q);
  CHECK_THROWS_AS(sweep_linf(q, c, -0.1), Error);
}

TEST_CASE("l1 sweep examples") {
  const std::vector<double> q{0.5, 0.5}, c{1.0, 0.0};
  auto p = sweep_l1(q, c, 0.2);
  CHECK(p[0] == doctest::Approx(0.6));
  CHECK(p[1] == doctest::Approx(0.4));
  p = sweep_l1(q, c, 2.0);
  CHECK(p[0] == doctest::Approx(1.0));
  CHECK(p[1] == doctest::Approx(0.0));
}

TEST_CASE("sweeps stay feasible and dominate random feasible points") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const double eps = 0.05 + 0.02 * (trial % 10);
    const auto inst = random_instance(300 + trial, n, eps, Distance::Linf);
    const auto q = inst.q.weights();
    const auto c = inst.c.costs();
    const auto pi = sweep_linf(q, c, eps);
    const auto p1 = sweep_l1(q, c, eps);
    CHECK(linf(pi, q) <= eps + 1e-12);
    CHECK(l1(p1, q) <= eps + 1e-12);
    CHECK(compensated_sum(pi) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(compensated_sum(p1) == doctest::Approx(1.0).epsilon(1e-12));
    for (int k = 0; k < 200; ++k) {
      // random zero-sum direction scaled into each ball
      std::vector<double> d(n);
      double mean = 0.0;
      for (double& v : d) mean += (v = u(rng));
      mean /= static_cast<double>(n);
      for (double& v : d) v -= mean;
      std::vector<double> z(n);
      const double s_inf = eps / std::max(linf(d, std::vector<double>(n, 0.0)), 1e-300);
      const double s_1 = eps / std::max(l1(d, std::vector<double>(n, 0.0)), 1e-300);
      for (const double scale : {s_inf, s_1}) {
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
          z[i] = q[i] + scale * d[i];
          ok = ok && z[i] >= 0.0;
        }
        if (!ok) continue;
        if (scale == s_inf) CHECK(dot(z, c) <= dot(pi, c) + 1e-12);
        if (scale == s_1) CHECK(dot(z, c) <= dot(p1, c) + 1e-12);
      }
    }
  }
}

TEST_CASE("l2 trivial candidate") {
  const auto q = validate_distribution({0.3, 0.7});
  const auto c = cost_stats({1.0, 0.0});
  CHECK_FALSE(l2_trivial(q, c, 0.98).has_value());
  const auto p = l2_trivial(q, c, 0.99);
  REQUIRE(p.has_value());
  CHECK((*p)[0] == doctest::Approx(1.0));
  CHECK((*p)[1] == doctest::Approx(0.0));
}

TEST_CASE("l2 two-point example") {
  const auto inst = make_dro_instance({0.5, 0.5}, {1.0, 0.0}, 0.2, Distance::L2);
  const auto r = solve_l2(inst);
  CHECK(r.status == SolveStatus::RootFound);
  REQUIRE(r.mu.has_value());
  REQUIRE(r.lambda.has_value());
  CHECK(*r.mu == doctest::Approx(3.535534).epsilon(1e-6));
  CHECK(*r.lambda == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(r.p[0] == doctest::Approx(0.641421).epsilon(1e-6));
  CHECK(r.p[1] == doctest::Approx(0.358579).epsilon(1e-6));
  CHECK(h6(1.0, make_dro_instance({0.5, 0.5}, {1.0, 0.0}, 0.3, Distance::L2)) ==
        doctest::Approx(0.41).epsilon(1e-12));
}

TEST_CASE("lambda(mu) solves its defining equation and the active set grows with mu") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = random_instance(600 + trial, 2 + trial % 10, 0.1, Distance::L2);
    L2Equation eq(inst);
    std::size_t prev_active = 0;
    for (int k = -6; k <= 12; ++k) {
      const double mu = std::pow(2.0, k);
      const auto sol = eq.inner(mu);
      double s = 0.0;
      std::size_t active = 0;
      for (std::size_t i = 0; i < inst.q.size(); ++i) {
        s += std::min(sol.lambda_of_mu - inst.c.costs()[i], mu * inst.q[i]);
        if (sol.lambda_of_mu - inst.c.costs()[i] < mu * inst.q[i]) ++active;
      }
      CHECK(std::abs(s) <= 1e-10 * std::max(1.0, mu));
      CHECK(active >= prev_active);
      prev_active = active;
    }
  }
}

TEST_CASE("h6 is eventually concave decreasing and the solve is tight") {
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = random_instance(700 + trial, 3 + trial % 8, 0.05, Distance::L2);
    L2Equation eq(inst);
    const auto r = solve_l2(inst);
    if (r.status != SolveStatus::RootFound) continue;
    const double mu0 = *r.mu;
    double prev = eq.h6(mu0);
    double prev_slope = eq.h6_with_slope(mu0).second;
    for (int k = 1; k <= 20; ++k) {
      const auto [v, s] = eq.h6_with_slope(mu0 * std::pow(1.3, k));
      CHECK(v <= prev + 1e-12);
      CHECK(s <= prev_slope + 1e-9 * std::abs(prev_slope));
      prev = v;
      prev_slope = s;
    }
    double d2 = 0.0;
    for (std::size_t i = 0; i < r.p.size(); ++i) d2 += std::pow(r.p[i] - inst.q[i], 2);
    CHECK(std::sqrt(d2) == doctest::Approx(inst.epsilon).epsilon(1e-6));
    CHECK(root_residual(inst, r) <= 1e-6);
  }
}

TEST_CASE("solve_dro dispatches all norm balls") {
  for (auto d : {Distance::L1, Distance::L2, Distance::Linf}) {
    const auto inst = make_dro_instance({0.5, 0.5}, {1.0, 0.0}, 0.2, d);
    const auto r = solve_dro(inst);
    CHECK(r.objective > 0.5);
    CHECK(ball_distance(d, r.p, inst.q) <= 0.2 + 1e-12);
  }
}

TEST_CASE("l2 solve is tight at large n") {
  for (std::size_t n : {1000, 100000}) {
    const auto inst = random_instance(n, n, 0.1, Distance::L2);
    const auto r = solve_l2(inst);
    REQUIRE(r.status == SolveStatus::RootFound);
    double d2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) d2 += std::pow(r.p[i] - inst.q[i], 2);
    CHECK(std::abs(std::sqrt(d2) - 0.1) <= 1e-9);
    CHECK(compensated_sum(r.p) == doctest::Approx(1.0).epsilon(1e-10));
  }
}
