#pragma once

#include <filesystem>
#include <optional>

#include "plumeloc/inference.hpp"
#include "plumeloc/measurement.hpp"
#include "plumeloc/scenario.hpp"

namespace plumeloc {

/// Process exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitDegenerate = 2 };

/// Maps an exception thrown by a command to its exit code.
int exit_code_for(const std::exception& e);

/// Simulate readings from the scenario's ground truth and write them (with
/// the debug count column when `with_counts`) to `out`.
ReadingSet cmd_simulate(const Scenario& scenario, const std::filesystem::path& out,
                        bool with_counts = false);

struct EstimateResult {
  WeightedEnsemble weighted;
  WeightedEnsemble resampled;
  PosteriorSummary summary;
};

inline constexpr const char* kWeightedEnsembleFile = "ensemble_weighted.csv";
inline constexpr const char* kResampledEnsembleFile = "ensemble_resampled.csv";
inline constexpr const char* kSummaryFile = "summary.json";

/// Run importance sampling on a readings file (defaults to the scenario's
/// `readings_csv`) and write the weighted ensemble, the resampled ensemble
/// and a summary into `out_dir`.
EstimateResult cmd_estimate(const Scenario& scenario,
                            const std::optional<std::filesystem::path>& readings_path,
                            const std::filesystem::path& out_dir);

/// Summarize an ensemble CSV. Writes JSON to `out`, or stdout when empty.
PosteriorSummary cmd_summarize(const std::filesystem::path& ensemble_path,
                               const std::optional<std::filesystem::path>& out);

}  // namespace plumeloc
