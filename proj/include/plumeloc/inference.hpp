#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "plumeloc/dispersion.hpp"
#include "plumeloc/measurement.hpp"
#include "plumeloc/prior.hpp"
#include "plumeloc/random.hpp"

namespace plumeloc {

/// Weighted sample approximating the posterior. Weights are normalized.
struct WeightedEnsemble {
  std::vector<ParameterVector> samples;
  std::vector<double> weights;
  /// log of the mean unnormalized weight; an estimate of log p(b).
  double log_evidence{0.0};

  std::size_t size() const { return samples.size(); }
};

struct PosteriorSummary {
  ParameterVector mean;
  ParameterVector sd;
  /// Highest-weight sample. A crude mode proxy, not a true MAP estimate.
  ParameterVector map_sample;
  std::size_t map_index{0};
  /// Indices of the smallest weight-sorted prefix holding >= credible_level of mass.
  std::vector<std::size_t> credible_indices;
  double credible_level{0.95};
  double credible_mass{0.0};
  double ess{0.0};
  double log_evidence{0.0};
  std::size_t sample_count{0};
};

struct InferenceOptions {
  /// Worker threads for the likelihood map; 0 picks the hardware count.
  unsigned threads{0};
};

/// Normalize log weights (log-likelihood plus optional log prior/proposal
/// ratio) with max subtraction. Throws DegeneratePosteriorError when every
/// weight is zero.
WeightedEnsemble normalize_log_weights(std::vector<ParameterVector> samples,
                                       std::span<const double> log_likelihoods,
                                       std::span<const double> log_prior_ratio = {});

/// Log-likelihood of every sample. Parallel across samples, result identical
/// to the sequential map.
std::vector<double> evaluate_log_likelihoods(std::span<const ParameterVector> samples,
                                             const BinaryLikelihood& likelihood,
                                             const InferenceOptions& options = {});

/// Importance sampling with the prior as the importance distribution, so
/// each unnormalized weight is the likelihood of its sample.
WeightedEnsemble importance_sample(std::span<const Reading> readings, const PriorSpec& spec,
                                   const Environment& env, std::size_t sample_count,
                                   RandomStream& rng, const InferenceOptions& options = {});

/// 1 / sum(w^2).
double effective_sample_size(const WeightedEnsemble& e);

/// Systematic resampling; the result has uniform weights.
WeightedEnsemble resample(const WeightedEnsemble& e, RandomStream& rng);

/// Indices of the highest-weight samples (ties by index) whose cumulative
/// weight first reaches `level`.
std::vector<std::size_t> credible_set(const WeightedEnsemble& e, double level = 0.95);

PosteriorSummary summarize(const WeightedEnsemble& e, double credible_level = 0.95);

}  // namespace plumeloc
