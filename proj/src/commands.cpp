#include "plumeloc/commands.hpp"

#include <fstream>
#include <iostream>

#include "plumeloc/error.hpp"
#include "plumeloc/io.hpp"

namespace plumeloc {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  return out;
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const DegeneratePosteriorError*>(&e)) return kExitDegenerate;
  return kExitUsage;
}

ReadingSet cmd_simulate(const Scenario& scenario, const std::filesystem::path& out,
                        bool with_counts) {
  if (!scenario.ground_truth) throw UsageError("scenario has no ground_truth section to simulate");
  const ReadingSet readings = generate_readings(*scenario.ground_truth, scenario.environment);
  auto file = open_out(out);
  write_readings_csv(file, readings, with_counts);
  return readings;
}

EstimateResult cmd_estimate(const Scenario& scenario,
                            const std::optional<std::filesystem::path>& readings_path,
                            const std::filesystem::path& out_dir) {
  const auto path = readings_path ? readings_path : scenario.readings_path;
  if (!path) throw UsageError("no readings file given (use --readings or readings_csv)");
  const ReadingSet readings = read_readings_csv(*path);
  if (readings.empty()) throw UsageError(path->string() + " contains no readings");

  const PriorSpec prior = scenario.build_prior(readings);
  RandomStream rng(scenario.seed);
  EstimateResult r;
  r.weighted = importance_sample(readings, prior, scenario.environment, scenario.samples, rng,
                                 {scenario.threads});
  r.summary = summarize(r.weighted);
  r.resampled = resample(r.weighted, rng);

  std::filesystem::create_directories(out_dir);
  {
    auto f = open_out(out_dir / kWeightedEnsembleFile);
    write_ensemble_csv(f, r.weighted);
  }
  {
    auto f = open_out(out_dir / kResampledEnsembleFile);
    write_ensemble_csv(f, r.resampled);
  }
  nlohmann::json j = summary_to_json(r.summary);
  j["readings"] = readings.size();
  j["detections"] = std::count_if(readings.begin(), readings.end(),
                                  [](const Reading& x) { return x.detected == 1; });
  j["support_area_m2"] = prior.support_area();
  j["support_area_exact"] = prior.support_area_is_exact();
  if (const auto& d = prior.region().disc()) {
    j["disc"] = {{"center_m", {d->center.x, d->center.y}}, {"radius_m", d->radius}};
  }
  j["seed"] = scenario.seed;
  auto f = open_out(out_dir / kSummaryFile);
  f << j.dump(2) << '\n';
  return r;
}

PosteriorSummary cmd_summarize(const std::filesystem::path& ensemble_path,
                               const std::optional<std::filesystem::path>& out) {
  const WeightedEnsemble e = read_ensemble_csv(ensemble_path);
  const PosteriorSummary s = summarize(e);
  const std::string text = summary_to_json(s).dump(2) + "\n";
  if (out) {
    auto f = open_out(*out);
    f << text;
  } else {
    std::cout << text;
  }
  return s;
}

}  // namespace plumeloc
