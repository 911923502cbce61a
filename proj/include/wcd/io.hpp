#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wcd/bench.hpp"
#include "wcd/core.hpp"

namespace wcd {

/// {"q": [...], "c": [...]}
DroInstance parse_dro_instance(const std::string& json_text, double epsilon, Distance distance);

/// {"q": [...], "l": [...], "u": [...]}
BoxSimplexInstance parse_box_simplex_instance(const std::string& json_text);

/// {"p": [...], "lambda": x|null, "mu": x|null, "status": s, "objective": x,
///  "h_evaluations": k}
std::string result_to_json(const SolverResult& result);

inline constexpr const char* kBenchCsvHeader = "method,n,trials,mean_time_s,mean_h_evals,seed,epsilon";

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);
std::vector<BenchRecord> read_bench_csv(std::istream& in);

std::string read_text_file(const std::string& path);

}  // namespace wcd
