#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "plumeloc/inference.hpp"
#include "plumeloc/measurement.hpp"

namespace plumeloc {

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

/// Header `x_m,y_m,b`, plus a `z` column when `with_counts` is set.
void write_readings_csv(std::ostream& out, const ReadingSet& readings, bool with_counts);
/// Accepts either header form. Throws ParseError with the offending line.
ReadingSet read_readings_csv(std::istream& in);
ReadingSet read_readings_csv(const std::filesystem::path& path);

/// Header `x0_m,y0_m,q0,v_mps,weight`.
void write_ensemble_csv(std::ostream& out, const WeightedEnsemble& e);
/// Reads an ensemble CSV; weights are renormalized to sum to one.
WeightedEnsemble read_ensemble_csv(std::istream& in);
WeightedEnsemble read_ensemble_csv(const std::filesystem::path& path);

nlohmann::json summary_to_json(const PosteriorSummary& s);

}  // namespace plumeloc
