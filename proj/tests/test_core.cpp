#include "doctest.h"
#include "wcd/core.hpp"

#include <random>

using namespace wcd;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected wcd::Error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("validate_distribution accepts and rejects inputs") {
  const auto d = validate_distribution({0.5, 0.5});
  CHECK(d.size() == 2);
  CHECK(d[0] == 0.5);

  CHECK(code_of([] { validate_distribution({0.5, 0.0, 0.5}); }) == ErrorCode::NonPositiveWeight);
  CHECK(code_of([] { validate_distribution({0.3, 0.3}); }) == ErrorCode::NotNormalized);
  CHECK(code_of([] { validate_distribution({1.0}); }) == ErrorCode::TooShort);
  CHECK(code_of([] { validate_distribution({1.2, -0.2}); }) == ErrorCode::NonPositiveWeight);
}

TEST_CASE("normalization tolerance is 1e-12") {
  CHECK_NOTHROW(validate_distribution({0.5 + 4e-13, 0.5}));
  CHECK(code_of([] { validate_distribution({0.5 + 4e-12, 0.5}); }) == ErrorCode::NotNormalized);
}

TEST_CASE("cost_stats") {
  const auto a = cost_stats({1.0, 0.0});
  CHECK(a.cmax() == 1.0);
  CHECK(a.cmin() == 0.0);
  REQUIRE(a.argmax_set().size() == 1);
  CHECK(a.argmax_set()[0] == 0);
  CHECK_FALSE(a.constant());

  const auto b = cost_stats({2.0, 2.0, 0.0});
  CHECK(b.cmax() == 2.0);
  CHECK(b.cmin() == 0.0);
  REQUIRE(b.argmax_set().size() == 2);
  CHECK(b.argmax_set()[0] == 0);
  CHECK(b.argmax_set()[1] == 1);

  CHECK(cost_stats({3.0, 3.0, 3.0}).constant());
}

TEST_CASE("argmax set uses exact equality and cost_stats is pure") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> level(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> c(8);
    for (double& v : c) v = 0.25 * level(rng);
    c[3] = std::nextafter(c[3], 10.0);  // one-ulp neighbour must not tie
    const auto s1 = cost_stats(c);
    const auto s2 = cost_stats(c);
    CHECK(s1.cmax() == s2.cmax());
    CHECK(s1.cmin() == s2.cmin());
    CHECK(std::vector(s1.argmax_set().begin(), s1.argmax_set().end()) ==
          std::vector(s2.argmax_set().begin(), s2.argmax_set().end()));
    std::size_t k = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const bool member = k < s1.argmax_set().size() && s1.argmax_set()[k] == i;
      CHECK(member == (c[i] == s1.cmax()));
      if (member) ++k;
    }
  }
}

TEST_CASE("make_dro_instance validation") {
  CHECK_NOTHROW(make_dro_instance({0.5, 0.5}, {1.0, 0.0}, 0.1, Distance::KL));
  CHECK(code_of([] { make_dro_instance({0.5, 0.5}, {1.0, 0.0, 2.0}, 0.1, Distance::KL); }) ==
        ErrorCode::DimensionMismatch);
  CHECK(code_of([] { make_dro_instance({0.5, 0.5}, {1.0, 0.0}, 0.0, Distance::L2); }) ==
        ErrorCode::InvalidRadius);
  CHECK(code_of([] { make_dro_instance({0.5, 0.5}, {1.0, 0.0}, 2.0, Distance::Hellinger); }) ==
        ErrorCode::InvalidRadius);
  CHECK_NOTHROW(make_dro_instance({0.5, 0.5}, {1.0, 0.0}, 2.0, Distance::KL));
}

TEST_CASE("make_box_simplex_instance validation") {
  CHECK_NOTHROW(make_box_simplex_instance({0.8, 0.6}, {0, 0}, {0.7, 1}));
  CHECK(code_of([] { make_box_simplex_instance({0.8, 0.6}, {0.8, 0}, {0.7, 1}); }) ==
        ErrorCode::InvalidBounds);
  CHECK(code_of([] { make_box_simplex_instance({0.8, 0.6}, {0.6, 0.6}, {0.7, 0.7}); }) ==
        ErrorCode::InfeasibleBounds);
  CHECK(code_of([] { make_box_simplex_instance({0.8, 0.6}, {0, 0}, {0.3, 0.3}); }) ==
        ErrorCode::InfeasibleBounds);
}

TEST_CASE("method names round-trip") {
  for (Method m : kAllMethods) CHECK(parse_method(method_name(m)) == m);
  CHECK(code_of([] { parse_method("l3"); }) == ErrorCode::ParseError);
  CHECK_FALSE(method_distance(Method::Simplex).has_value());
}

TEST_CASE("error classification") {
  CHECK(is_validation_error(ErrorCode::NotNormalized));
  CHECK(is_validation_error(ErrorCode::InfeasibleBounds));
  CHECK_FALSE(is_validation_error(ErrorCode::NoSignChange));
  CHECK_FALSE(is_validation_error(ErrorCode::MaxIterExceeded));
}
