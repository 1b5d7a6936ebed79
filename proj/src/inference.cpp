#include "plumeloc/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "plumeloc/error.hpp"

namespace plumeloc {

WeightedEnsemble normalize_log_weights(std::vector<ParameterVector> samples,
                                       std::span<const double> log_likelihoods,
                                       std::span<const double> log_prior_ratio) {
  const std::size_t n = samples.size();
  if (n == 0) throw ValidationError("ensemble needs at least one sample");
  if (log_likelihoods.size() != n || (!log_prior_ratio.empty() && log_prior_ratio.size() != n)) {
    throw ValidationError("log-weight arrays do not match the sample count");
  }

  std::vector<double> log_w(n);
  for (std::size_t i = 0; i < n; ++i) {
    log_w[i] = log_likelihoods[i] + (log_prior_ratio.empty() ? 0.0 : log_prior_ratio[i]);
    if (std::isnan(log_w[i])) throw ValidationError("log weight is NaN");
  }
  const double top = *std::max_element(log_w.begin(), log_w.end());
  if (top == -std::numeric_limits<double>::infinity()) {
    throw DegeneratePosteriorError(
        "all " + std::to_string(n) +
        " importance weights are zero: no prior sample can explain the detections; "
        "increase the sample count or widen the prior");
  }

  WeightedEnsemble e;
  e.weights.resize(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    e.weights[i] = std::exp(log_w[i] - top);
    sum += e.weights[i];
  }
  for (auto& w : e.weights) w /= sum;
  e.log_evidence = top + std::log(sum) - std::log(static_cast<double>(n));
  e.samples = std::move(samples);
  return e;
}

std::vector<double> evaluate_log_likelihoods(std::span<const ParameterVector> samples,
                                             const BinaryLikelihood& likelihood,
                                             const InferenceOptions& options) {
  std::vector<double> out(samples.size());
  unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(samples.size() / 256 + 1)));

  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out[i] = likelihood(samples[i]);
  };
  if (workers == 1) {
    run(0, samples.size());
    return out;
  }

  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::jthread> pool;
  const std::size_t chunk = (samples.size() + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(samples.size(), w * chunk);
    const std::size_t end = std::min(samples.size(), begin + chunk);
    pool.emplace_back([&, w, begin, end] {
      try {
        run(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  pool.clear();
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  return out;
}

WeightedEnsemble importance_sample(std::span<const Reading> readings, const PriorSpec& spec,
                                   const Environment& env, std::size_t sample_count,
                                   RandomStream& rng, const InferenceOptions& options) {
  if (sample_count == 0) throw ValidationError("sample count must be at least 1");
  if (readings.empty()) throw ValidationError("inference needs at least one reading");
  env.validate();

  std::vector<ParameterVector> samples;
  samples.reserve(sample_count);
  for (std::size_t i = 0; i < sample_count; ++i) samples.push_back(sample_prior(spec, rng));

  const BinaryLikelihood likelihood(readings, env);
  const auto log_lik = evaluate_log_likelihoods(samples, likelihood, options);
  // Proposal equals prior, so the prior/proposal ratio is identically one.
  return normalize_log_weights(std::move(samples), log_lik);
}

double effective_sample_size(const WeightedEnsemble& e) {
  double sum_sq = 0.0;
  for (double w : e.weights) sum_sq += w * w;
  return 1.0 / sum_sq;
}

WeightedEnsemble resample(const WeightedEnsemble& e, RandomStream& rng) {
  const std::size_t n = e.size();
  WeightedEnsemble out;
  out.log_evidence = e.log_evidence;
  out.samples.reserve(n);
  out.weights.assign(n, 1.0 / static_cast<double>(n));

  const double step = 1.0 / static_cast<double>(n);
  const double offset = rng.uniform() * step;
  double cumulative = e.weights[0];
  std::size_t i = 0;
  for (std::size_t m = 0; m < n; ++m) {
    const double u = offset + static_cast<double>(m) * step;
    while (u >= cumulative && i + 1 < n) cumulative += e.weights[++i];
    out.samples.push_back(e.samples[i]);
  }
  return out;
}

std::vector<std::size_t> credible_set(const WeightedEnsemble& e, double level) {
  std::vector<std::size_t> order(e.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return e.weights[a] > e.weights[b]; });
  double mass = 0.0;
  std::size_t k = 0;
  while (k < order.size() && mass < level) mass += e.weights[order[k++]];
  order.resize(k);
  return order;
}

PosteriorSummary summarize(const WeightedEnsemble& e, double credible_level) {
  if (e.size() == 0) throw ValidationError("cannot summarize an empty ensemble");
  PosteriorSummary s;
  s.sample_count = e.size();
  s.log_evidence = e.log_evidence;
  s.ess = effective_sample_size(e);
  s.credible_level = credible_level;

  auto moments = [&](auto field, double& mean, double& sd) {
    double m = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) m += e.weights[i] * field(e.samples[i]);
    double v = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      const double d = field(e.samples[i]) - m;
      v += e.weights[i] * d * d;
    }
    mean = m;
    sd = std::sqrt(v);
  };
  moments([](const ParameterVector& p) { return p.x0; }, s.mean.x0, s.sd.x0);
  moments([](const ParameterVector& p) { return p.y0; }, s.mean.y0, s.sd.y0);
  moments([](const ParameterVector& p) { return p.release_rate; }, s.mean.release_rate,
          s.sd.release_rate);
  moments([](const ParameterVector& p) { return p.wind_speed; }, s.mean.wind_speed,
          s.sd.wind_speed);

  // max_element returns the first maximum, i.e. the lowest index on ties.
  s.map_index = static_cast<std::size_t>(
      std::max_element(e.weights.begin(), e.weights.end()) - e.weights.begin());
  s.map_sample = e.samples[s.map_index];

  s.credible_indices = credible_set(e, credible_level);
  for (std::size_t i : s.credible_indices) s.credible_mass += e.weights[i];
  return s;
}

}  // namespace plumeloc
