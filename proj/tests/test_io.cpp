#include "doctest.h"
#include "json.hpp"
#include "wcd/dro.hpp"
#include "wcd/io.hpp"

#include <sstream>

using namespace wcd;

TEST_CASE("parse instances") {
  const auto inst = parse_dro_instance(R"({"q":[0.5,0.5],"c":[1,0]})", 0.1, Distance::L2);
  CHECK(inst.q.size() == 2);
  CHECK(inst.c.cmax() == 1.0);
  const auto box = parse_box_simplex_instance(R"({"q":[0.8,0.6],"l":[0,0],"u":[0.7,1]})");
  CHECK(box.u[0] == 0.7);
}

TEST_CASE("parse errors") {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::TooLarge;
  };
  CHECK(code([] { parse_dro_instance("{", 0.1, Distance::KL); }) == ErrorCode::ParseError);
  CHECK(code([] { parse_dro_instance(R"({"q":[0.5,0.5]})", 0.1, Distance::KL); }) == ErrorCode::ParseError);
  CHECK(code([] { parse_dro_instance(R"({"q":[0.4,0.5],"c":[1,0]})", 0.1, Distance::KL); }) ==
        ErrorCode::NotNormalized);
  CHECK(code([] { parse_box_simplex_instance(R"({"q":[1],"l":"x","u":[1]})"); }) == ErrorCode::ParseError);
  CHECK(code([] { read_text_file("/nonexistent/file.json"); }) == ErrorCode::ParseError);
}

TEST_CASE("result JSON") {
  const auto inst = parse_dro_instance(R"({"q":[0.5,0.5],"c":[1,0]})", 0.2, Distance::L2);
  const auto r = solve_dro(inst);
  const auto j = nlohmann::json::parse(result_to_json(r));
  CHECK(j["status"] == "RootFound");
  CHECK(j["p"].size() == 2);
  CHECK(j["mu"].get<double>() == doctest::Approx(*r.mu));
  CHECK(j["lambda"].get<double>() == doctest::Approx(*r.lambda));
  CHECK(j["h_evaluations"].get<std::size_t>() == r.h_evaluations);

  const auto lin = solve_dro(parse_dro_instance(R"({"q":[0.5,0.5],"c":[1,0]})", 0.2, Distance::Linf));
  const auto jl = nlohmann::json::parse(result_to_json(lin));
  CHECK(jl["lambda"].is_null());
  CHECK(jl["mu"].is_null());
}

TEST_CASE("bench CSV round trip") {
  std::vector<BenchRecord> recs(2);
  recs[0] = {"kl", 1000, 1.234567e-5, 42.0, 20, 7, 0.1, 0};
  recs[1] = {"simplex", 300000, 0.0123, 0.0, 20, 7, 0.1, 0};
  std::stringstream ss;
  write_bench_csv(ss, recs);
  CHECK(ss.str().rfind(kBenchCsvHeader, 0) == 0);
  const auto back = read_bench_csv(ss);
  REQUIRE(back.size() == 2);
  CHECK(back[0].method == "kl");
  CHECK(back[0].n == 1000);
  CHECK(back[0].mean_time_s == doctest::Approx(1.234567e-5).epsilon(1e-8));
  CHECK(back[0].h_evaluations == 42.0);
  CHECK(back[1].seed == 7);
  CHECK(back[1].epsilon == 0.1);

  std::stringstream bad("not,a,header\n");
  CHECK_THROWS_AS(read_bench_csv(bad), Error);
}
