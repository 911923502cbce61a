#include "wcd/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace wcd {

namespace {

using nlohmann::json;

json parse_object(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "instance must be a JSON object");
  return doc;
}

std::vector<double> number_array(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw Error(ErrorCode::ParseError, std::string("missing array '") + key + "'");
  }
  std::vector<double> out;
  out.reserve(doc[key].size());
  for (const auto& v : doc[key]) {
    if (!v.is_number()) {
      throw Error(ErrorCode::ParseError, std::string("non-numeric entry in '") + key + "'");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

DroInstance parse_dro_instance(const std::string& json_text, double epsilon, Distance distance) {
  const auto doc = parse_object(json_text);
  return make_dro_instance(number_array(doc, "q"), number_array(doc, "c"), epsilon, distance);
}

BoxSimplexInstance parse_box_simplex_instance(const std::string& json_text) {
  const auto doc = parse_object(json_text);
  return make_box_simplex_instance(number_array(doc, "q"), number_array(doc, "l"),
                                   number_array(doc, "u"));
}

std::string result_to_json(const SolverResult& result) {
  json doc;
  doc["p"] = result.p;
  doc["lambda"] = result.lambda ? json(*result.lambda) : json(nullptr);
  doc["mu"] = result.mu ? json(*result.mu) : json(nullptr);
  doc["status"] = std::string(status_name(result.status));
  doc["objective"] = result.objective;
  doc["h_evaluations"] = result.h_evaluations;
  return doc.dump(2);
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kBenchCsvHeader << '\n';
  for (const auto& r : records) {
    char time_buf[40];
    std::snprintf(time_buf, sizeof time_buf, "%.9e", r.mean_time_s);
    out << r.method << ',' << r.n << ',' << r.trials << ',' << time_buf << ','
        << format_double(r.h_evaluations) << ',' << r.seed << ',' << format_double(r.epsilon)
        << '\n';
  }
}

std::vector<BenchRecord> read_bench_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kBenchCsvHeader) {
    throw Error(ErrorCode::ParseError, "bench CSV header mismatch");
  }
  std::vector<BenchRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::vector<std::string> cells;
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 7) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 7 fields");
    }
    try {
      BenchRecord r;
      r.method = cells[0];
      r.n = std::stoull(cells[1]);
      r.trials = std::stoull(cells[2]);
      r.mean_time_s = std::stod(cells[3]);
      r.h_evaluations = std::stod(cells[4]);
      r.seed = std::stoull(cells[5]);
      r.epsilon = std::stod(cells[6]);
      records.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad number");
    }
  }
  return records;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace wcd
