#include "plumeloc/simulate.hpp"

#include <cmath>

#include "plumeloc/error.hpp"

namespace plumeloc {

namespace {

constexpr double kInversionLimit = 30.0;

std::int64_t poisson_inversion(double mu, RandomStream& rng) {
  const double u = rng.uniform();
  double p = std::exp(-mu);
  double cdf = p;
  std::int64_t k = 0;
  while (u >= cdf) {
    ++k;
    p *= mu / static_cast<double>(k);
    cdf += p;
    // Rounding can leave the summed cdf just short of u deep in the tail.
    if (p == 0.0 && static_cast<double>(k) > mu) break;
  }
  return k;
}

// Hormann (1993), transformed rejection with squeeze.
std::int64_t poisson_ptrs(double mu, RandomStream& rng) {
  const double smu = std::sqrt(mu);
  const double b = 0.931 + 2.53 * smu;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  const double log_mu = std::log(mu);
  for (;;) {
    const double u = rng.uniform() - 0.5;
    const double v = rng.uniform();
    const double us = 0.5 - std::abs(u);
    const double k = std::floor((2.0 * a / us + b) * u + mu + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<std::int64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
        -mu + k * log_mu - std::lgamma(k + 1.0)) {
      return static_cast<std::int64_t>(k);
    }
  }
}

}  // namespace

std::int64_t poisson_sample(double mu, RandomStream& rng) {
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw DomainError("Poisson mean must be finite and >= 0");
  if (mu == 0.0) return 0;
  return mu <= kInversionLimit ? poisson_inversion(mu, rng) : poisson_ptrs(mu, rng);
}

ReadingSet generate_readings(const GroundTruth& gt, const Environment& env) {
  env.validate();
  gt.theta.validate();
  for (const auto& p : gt.sensor_positions) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw ValidationError("sensor position is not finite");
    }
  }

  const EncounterRateContext ctx = plume_lambda(env, gt.theta.wind_speed);
  const Point source = to_wind_frame(gt.theta.position(), {}, env.wind_direction_deg);
  const ParameterVector local{source.x, source.y, gt.theta.release_rate, gt.theta.wind_speed};

  RandomStream rng(gt.seed);
  ReadingSet out;
  out.reserve(gt.sensor_positions.size());
  for (const auto& pos : gt.sensor_positions) {
    const Point sensor = to_wind_frame(pos, {}, env.wind_direction_deg);
    const double mu = mean_count(encounter_rate(sensor, local, env, ctx), env);
    const std::int64_t z = poisson_sample(mu, rng);
    out.push_back({pos, z >= 1 ? 1 : 0, z});
  }
  return out;
}

}  // namespace plumeloc
