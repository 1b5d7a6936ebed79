#include "plumeloc/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string_view>
#include <vector>

#include "plumeloc/error.hpp"

namespace plumeloc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

[[noreturn]] void bad_line(std::size_t line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

double parse_double(std::string_view field, std::size_t line_no) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(v)) {
    bad_line(line_no, "invalid number \"" + std::string(field) + "\"");
  }
  return v;
}

std::int64_t parse_int(std::string_view field, std::size_t line_no) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    bad_line(line_no, "invalid integer \"" + std::string(field) + "\"");
  }
  return v;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

nlohmann::json params_json(const ParameterVector& p) {
  return {{"x0_m", p.x0}, {"y0_m", p.y0}, {"q0", p.release_rate}, {"v_mps", p.wind_speed}};
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_readings_csv(std::ostream& out, const ReadingSet& readings, bool with_counts) {
  out << (with_counts ? "x_m,y_m,b,z\n" : "x_m,y_m,b\n");
  for (const auto& r : readings) {
    out << format_double(r.position.x) << ',' << format_double(r.position.y) << ',' << r.detected;
    if (with_counts) {
      out << ',';
      if (r.count) out << *r.count;
    }
    out << '\n';
  }
}

ReadingSet read_readings_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError("readings file is empty (no header)");
  ++line_no;
  const auto header = split(line);
  const bool with_counts = header.size() == 4 && header[3] == "z";
  if (header.size() < 3 || header[0] != "x_m" || header[1] != "y_m" || header[2] != "b" ||
      (header.size() == 4 && !with_counts) || header.size() > 4) {
    bad_line(line_no, "expected header x_m,y_m,b or x_m,y_m,b,z");
  }

  ReadingSet out;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto f = split(line);
    if (f.size() != header.size()) {
      bad_line(line_no, "expected " + std::to_string(header.size()) + " fields, got " +
                            std::to_string(f.size()));
    }
    Reading r;
    r.position = {parse_double(f[0], line_no), parse_double(f[1], line_no)};
    const auto b = parse_int(f[2], line_no);
    if (b != 0 && b != 1) bad_line(line_no, "b must be 0 or 1");
    r.detected = static_cast<int>(b);
    if (with_counts && !f[3].empty()) {
      r.count = parse_int(f[3], line_no);
      if (*r.count < 0) bad_line(line_no, "z must be nonnegative");
    }
    out.push_back(r);
  }
  return out;
}

ReadingSet read_readings_csv(const std::filesystem::path& path) {
  auto in = open(path);
  try {
    return read_readings_csv(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_ensemble_csv(std::ostream& out, const WeightedEnsemble& e) {
  out << "x0_m,y0_m,q0,v_mps,weight\n";
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto& s = e.samples[i];
    out << format_double(s.x0) << ',' << format_double(s.y0) << ','
        << format_double(s.release_rate) << ',' << format_double(s.wind_speed) << ','
        << format_double(e.weights[i]) << '\n';
  }
}

WeightedEnsemble read_ensemble_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError("ensemble file is empty (no header)");
  ++line_no;
  const auto header = split(line);
  if (header != std::vector<std::string_view>{"x0_m", "y0_m", "q0", "v_mps", "weight"}) {
    bad_line(line_no, "expected header x0_m,y0_m,q0,v_mps,weight");
  }
  WeightedEnsemble e;
  e.log_evidence = std::numeric_limits<double>::quiet_NaN();
  double total = 0.0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto f = split(line);
    if (f.size() != 5) bad_line(line_no, "expected 5 fields, got " + std::to_string(f.size()));
    ParameterVector p{parse_double(f[0], line_no), parse_double(f[1], line_no),
                      parse_double(f[2], line_no), parse_double(f[3], line_no)};
    const double w = parse_double(f[4], line_no);
    if (w < 0.0) bad_line(line_no, "negative weight");
    e.samples.push_back(p);
    e.weights.push_back(w);
    total += w;
  }
  if (e.samples.empty()) throw ParseError("ensemble file has no samples");
  if (!(total > 0.0)) throw ParseError("ensemble weights sum to zero");
  for (auto& w : e.weights) w /= total;
  return e;
}

WeightedEnsemble read_ensemble_csv(const std::filesystem::path& path) {
  auto in = open(path);
  try {
    return read_ensemble_csv(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

nlohmann::json summary_to_json(const PosteriorSummary& s) {
  nlohmann::json j;
  j["samples"] = s.sample_count;
  j["mean"] = params_json(s.mean);
  j["sd"] = params_json(s.sd);
  j["map_sample"] = params_json(s.map_sample);
  j["map_index"] = s.map_index;
  j["ess"] = s.ess;
  j["log_evidence"] = std::isfinite(s.log_evidence) ? nlohmann::json(s.log_evidence) : nlohmann::json(nullptr);
  j["credible_level"] = s.credible_level;
  j["credible_mass"] = s.credible_mass;
  j["credible_count"] = s.credible_indices.size();
  return j;
}

}  // namespace plumeloc
