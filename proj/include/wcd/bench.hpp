#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "wcd/core.hpp"

namespace wcd {

/// splitmix64: state += 0x9E3779B97F4A7C15, then the standard output mix.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Top 53 bits scaled into [0, 1).
  double uniform();

 private:
  std::uint64_t state_;
};

struct GeneratedInstance {
  std::vector<double> q;  // normalized, strictly positive
  std::vector<double> c;  // in [0, 1)
};

/// First n draws form the raw q (zero draws are skipped), the next n form c.
GeneratedInstance generate_instance(std::size_t n, std::uint64_t seed);

/// Box-simplex benchmark family: the first n draws d give the point 2 d / n,
/// l = 0, and the next n draws e give u_i = (0.5 + e_i) * 2 / n, so that
/// sum(u) >= 1 always holds.
BoxSimplexInstance generate_box_simplex(std::size_t n, std::uint64_t seed);

/// Seed of one benchmark trial, mixed from the run seed, size and trial index.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t n, std::size_t trial);

struct BenchRecord {
  std::string method;
  std::size_t n = 0;
  double mean_time_s = 0.0;
  double h_evaluations = 0.0;  // mean over successful trials
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double epsilon = 0.0;
  std::size_t failures = 0;
};

struct BenchOptions {
  std::vector<Method> methods;
  std::vector<std::size_t> sizes;
  std::size_t trials = 100;
  double epsilon = 0.1;
  std::uint64_t seed = 1;
  std::size_t warmup = 3;
};

/// Solves `trials` generated instances per (method, n) cell and averages the
/// wall-clock solve time and the h-evaluation count. Solver errors are
/// counted in `failures` instead of aborting the run.
std::vector<BenchRecord> run_bench(const BenchOptions& opts,
                                   const std::function<void(const BenchRecord&)>& on_record = {});

struct PowerFit {
  double a = 0.0;
  double b = 0.0;
};

/// Least squares for log t = log a + b log n.
PowerFit fit_power_law(std::span<const double> n, std::span<const double> t);
/// Fit over records of a single method.
PowerFit fit_power_law(std::span<const BenchRecord> records);
/// One fit per method name.
std::map<std::string, PowerFit> fit_power_laws(std::span<const BenchRecord> records);

}  // namespace wcd
