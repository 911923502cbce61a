#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wcd/bench.hpp"
#include "wcd/box_simplex.hpp"
#include "wcd/dro.hpp"
#include "wcd/io.hpp"
#include "wcd/oracle.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitSolver = 3;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw wcd::Error(wcd::ErrorCode::ParseError, "cannot write '" + path + "'");
  out << text;
}

int run_solve(const std::string& method_name, const std::string& input,
              std::optional<double> epsilon, const std::string& output) {
  const auto method = wcd::parse_method(method_name);
  const auto text = wcd::read_text_file(input);
  wcd::SolverResult result;
  if (method == wcd::Method::Simplex) {
    result = wcd::solve_box_simplex(wcd::parse_box_simplex_instance(text));
  } else {
    if (!epsilon) {
      throw wcd::Error(wcd::ErrorCode::InvalidRadius, "--epsilon is required for DRO methods");
    }
    const auto inst = wcd::parse_dro_instance(text, *epsilon, *wcd::method_distance(method));
    result = wcd::solve_dro(inst);
  }
  write_output(wcd::result_to_json(result) + "\n", output);
  return 0;
}

int run_bench(const std::vector<std::string>& methods, const std::vector<std::size_t>& sizes,
              std::size_t trials, double epsilon, std::uint64_t seed, const std::string& output) {
  wcd::BenchOptions opts;
  for (const auto& m : methods) opts.methods.push_back(wcd::parse_method(m));
  opts.sizes = sizes;
  opts.trials = trials;
  opts.epsilon = epsilon;
  opts.seed = seed;
  if (trials == 0) throw wcd::Error(wcd::ErrorCode::DomainViolation, "--trials must be >= 1");
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] < sizes[i - 1]) {
      throw wcd::Error(wcd::ErrorCode::DomainViolation, "--sizes must be ascending");
    }
  }
  for (auto n : sizes) {
    if (n < 2) throw wcd::Error(wcd::ErrorCode::TooShort, "sizes must be >= 2");
  }
  const auto records = wcd::run_bench(opts, [](const wcd::BenchRecord& r) {
    std::fprintf(stderr, "%-9s n=%-8zu time=%.3es evals=%.2f%s\n", r.method.c_str(), r.n,
                 r.mean_time_s, r.h_evaluations,
                 r.failures ? (" failures=" + std::to_string(r.failures)).c_str() : "");
  });
  std::ostringstream csv;
  wcd::write_bench_csv(csv, records);
  write_output(csv.str(), output);
  for (const auto& r : records) {
    if (r.failures > 0) return kExitSolver;
  }
  return 0;
}

int run_fit(const std::string& input) {
  std::ifstream in(input);
  if (!in) throw wcd::Error(wcd::ErrorCode::ParseError, "cannot open '" + input + "'");
  const auto records = wcd::read_bench_csv(in);
  for (const auto& [method, fit] : wcd::fit_power_laws(records)) {
    std::printf("%s a=%.6e b=%.4f\n", method.c_str(), fit.a, fit.b);
  }
  return 0;
}

int run_oracle_check(const std::string& method_name, std::size_t n, std::size_t trials,
                     double step, double epsilon, std::uint64_t seed) {
  const auto method = wcd::parse_method(method_name);
  if (n != 2 && n != 3) throw wcd::Error(wcd::ErrorCode::TooLarge, "--n must be 2 or 3");
  const auto summary = wcd::oracle_check(method, n, trials, step, epsilon, seed);
  for (const auto& msg : summary.messages) std::printf("FAIL %s\n", msg.c_str());
  std::printf("%s: %zu/%zu passed, worst gap %.3e, worst residual %.3e\n", method_name.c_str(),
              summary.trials - summary.failures, summary.trials, summary.worst_gap,
              summary.worst_residual);
  return summary.failures == 0 ? 0 : kExitSolver;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Worst-case distributions over divergence and norm balls, and box-simplex projection"};
  app.require_subcommand(1);

  std::string method, input, output;
  std::optional<double> solve_eps;
  auto* solve = app.add_subcommand("solve", "Solve one instance read from a JSON file");
  solve->add_option("--method", method, "kl|burg|hellinger|chi2|mchi2|l1|l2|linf|simplex")->required();
  solve->add_option("--input", input, "Instance JSON file")->required();
  solve->add_option("--epsilon", solve_eps, "Ball radius (DRO methods)");
  solve->add_option("--output", output, "Result JSON file (default: stdout)");

  std::vector<std::string> bench_methods;
  std::vector<std::size_t> sizes;
  std::size_t trials = 100;
  double epsilon = 0.1;
  std::uint64_t seed = 1;
  std::string bench_output;
  auto* bench = app.add_subcommand("bench", "Time the solvers on generated instances");
  bench->add_option("--methods", bench_methods, "Comma-separated methods")->required()->delimiter(',');
  bench->add_option("--sizes", sizes, "Comma-separated ascending sizes")->required()->delimiter(',');
  bench->add_option("--trials", trials, "Instances per cell");
  bench->add_option("--epsilon", epsilon, "Ball radius");
  bench->add_option("--seed", seed, "Run seed");
  bench->add_option("--output", bench_output, "CSV file (default: stdout)");

  std::string fit_input;
  auto* fit = app.add_subcommand("fit", "Fit t(n) = a n^b per method from a bench CSV");
  fit->add_option("--input", fit_input, "Bench CSV")->required();

  std::string oc_method;
  std::size_t oc_n = 3, oc_trials = 50;
  double oc_step = 1e-3, oc_eps = 0.1;
  std::uint64_t oc_seed = 1;
  auto* oc = app.add_subcommand("oracle-check", "Compare a solver with the grid oracle");
  oc->add_option("--method", oc_method, "Method")->required();
  oc->add_option("--n", oc_n, "Dimension (2 or 3)");
  oc->add_option("--trials", oc_trials, "Number of instances");
  oc->add_option("--step", oc_step, "Grid step");
  oc->add_option("--epsilon", oc_eps, "Ball radius");
  oc->add_option("--seed", oc_seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (solve->parsed()) return run_solve(method, input, solve_eps, output);
    if (bench->parsed()) return run_bench(bench_methods, sizes, trials, epsilon, seed, bench_output);
    if (fit->parsed()) return run_fit(fit_input);
    if (oc->parsed()) return run_oracle_check(oc_method, oc_n, oc_trials, oc_step, oc_eps, oc_seed);
  } catch (const wcd::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return wcd::is_validation_error(e.code()) ? kExitValidation : kExitSolver;
  }
  return 0;
}
