#include "wcd/bench.hpp"

#include <chrono>
#include <cmath>
#include <set>

#include "wcd/box_simplex.hpp"
#include "wcd/dro.hpp"

namespace wcd {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

GeneratedInstance generate_instance(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::TooShort, "instances need n >= 2");
  SplitMix64 rng(seed);
  GeneratedInstance out;
  out.q.reserve(n);
  while (out.q.size() < n) {
    const double v = rng.uniform();
    if (v > 0.0) out.q.push_back(v);
  }
  const double total = compensated_sum(out.q);
  for (double& v : out.q) v /= total;
  out.c.resize(n);
  for (double& v : out.c) v = rng.uniform();
  return out;
}

BoxSimplexInstance generate_box_simplex(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::TooShort, "instances need n >= 2");
  SplitMix64 rng(seed);
  const double scale = 2.0 / static_cast<double>(n);
  BoxSimplexInstance inst;
  inst.q.resize(n);
  for (double& v : inst.q) v = rng.uniform() * scale;
  inst.l.assign(n, 0.0);
  inst.u.resize(n);
  for (double& v : inst.u) v = (0.5 + rng.uniform()) * scale;
  return inst;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t n, std::size_t trial) {
  SplitMix64 mix(seed ^ (static_cast<std::uint64_t>(n) * 0xD1B54A32D192ED03ULL) ^
                 (static_cast<std::uint64_t>(trial) * 0x8CB92BA72F3D8DD7ULL));
  return mix.next();
}

namespace {

SolverResult solve_generated(Method method, std::size_t n, std::uint64_t seed, double eps) {
  if (method == Method::Simplex) {
    return solve_box_simplex(generate_box_simplex(n, seed));
  }
  auto gen = generate_instance(n, seed);
  const auto inst = make_dro_instance(std::move(gen.q), std::move(gen.c), eps,
                                      *method_distance(method));
  return solve_dro(inst);
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchOptions& opts,
                                   const std::function<void(const BenchRecord&)>& on_record) {
  using clock = std::chrono::steady_clock;
  std::vector<BenchRecord> records;
  for (Method method : opts.methods) {
    for (std::size_t n : opts.sizes) {
      for (std::size_t w = 0; w < opts.warmup; ++w) {
        try {
          (void)solve_generated(method, n, trial_seed(opts.seed, n, w), opts.epsilon);
        } catch (const Error&) {
        }
      }
      BenchRecord rec;
      rec.method = std::string(method_name(method));
      rec.n = n;
      rec.seed = opts.seed;
      rec.epsilon = opts.epsilon;
      double total_time = 0.0;
      double total_evals = 0.0;
      for (std::size_t t = 0; t < opts.trials; ++t) {
        const auto seed = trial_seed(opts.seed, n, t);
        // Instance generation stays outside the timed region.
        if (method == Method::Simplex) {
          const auto inst = generate_box_simplex(n, seed);
          const auto start = clock::now();
          try {
            const auto res = solve_box_simplex(inst);
            total_time += std::chrono::duration<double>(clock::now() - start).count();
            total_evals += static_cast<double>(res.h_evaluations);
            ++rec.trials;
          } catch (const Error&) {
            ++rec.failures;
          }
          continue;
        }
        auto gen = generate_instance(n, seed);
        const auto inst = make_dro_instance(std::move(gen.q), std::move(gen.c), opts.epsilon,
                                            *method_distance(method));
        const auto start = clock::now();
        try {
          const auto res = solve_dro(inst);
          total_time += std::chrono::duration<double>(clock::now() - start).count();
          total_evals += static_cast<double>(res.h_evaluations);
          ++rec.trials;
        } catch (const Error&) {
          ++rec.failures;
        }
      }
      if (rec.trials > 0) {
        rec.mean_time_s = total_time / static_cast<double>(rec.trials);
        rec.h_evaluations = total_evals / static_cast<double>(rec.trials);
      }
      if (on_record) on_record(rec);
      records.push_back(std::move(rec));
    }
  }
  return records;
}

PowerFit fit_power_law(std::span<const double> n, std::span<const double> t) {
  if (n.size() != t.size()) {
    throw Error(ErrorCode::DimensionMismatch, "sizes and times differ in length");
  }
  std::set<double> distinct(n.begin(), n.end());
  if (distinct.size() < 3) {
    throw Error(ErrorCode::DegenerateFit, "need at least three distinct sizes");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (!(n[i] > 0.0) || !(t[i] > 0.0)) {
      throw Error(ErrorCode::DegenerateFit, "sizes and times must be positive");
    }
    const double x = std::log(n[i]);
    const double y = std::log(t[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(n.size());
  const double denom = m * sxx - sx * sx;
  const double b = (m * sxy - sx * sy) / denom;
  const double log_a = (sy - b * sx) / m;
  return {std::exp(log_a), b};
}

PowerFit fit_power_law(std::span<const BenchRecord> records) {
  std::vector<double> n, t;
  for (const auto& r : records) {
    n.push_back(static_cast<double>(r.n));
    t.push_back(r.mean_time_s);
  }
  return fit_power_law(n, t);
}

std::map<std::string, PowerFit> fit_power_laws(std::span<const BenchRecord> records) {
  std::map<std::string, std::vector<BenchRecord>> grouped;
  for (const auto& r : records) grouped[r.method].push_back(r);
  std::map<std::string, PowerFit> fits;
  for (const auto& [method, recs] : grouped) fits[method] = fit_power_law(recs);
  return fits;
}

}  // namespace wcd
