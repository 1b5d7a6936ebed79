#include "plumeloc/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "plumeloc/bessel.hpp"
#include "plumeloc/error.hpp"

namespace plumeloc {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ValidationError(std::string(name) + " must be positive and finite, got " +
                          std::to_string(v));
  }
}

}  // namespace

void Environment::validate() const {
  require_positive(diffusivity, "diffusivity");
  require_positive(particle_lifetime, "particle_lifetime");
  require_positive(sensor_radius, "sensor_radius");
  require_positive(sensing_interval, "sensing_interval");
  require_positive(wind_mean, "wind_mean");
  require_positive(wind_sd, "wind_sd");
  if (!std::isfinite(wind_direction_deg)) throw ValidationError("wind_direction is not finite");
  plume_lambda(*this, wind_mean);
}

void ParameterVector::validate() const {
  if (!std::isfinite(x0) || !std::isfinite(y0)) throw ValidationError("source position is not finite");
  require_positive(release_rate, "release_rate");
  require_positive(wind_speed, "wind_speed");
}

EncounterRateContext plume_lambda(const Environment& env, double wind_speed) {
  if (!(wind_speed > 0.0) || !std::isfinite(wind_speed)) {
    throw DomainError("wind speed must be positive and finite");
  }
  const double d = env.diffusivity;
  const double tau = env.particle_lifetime;
  const double lambda = std::sqrt(d * tau / (1.0 + wind_speed * wind_speed * tau / (4.0 * d)));
  if (!(lambda > env.sensor_radius)) {
    throw ModelValidityError("plume length scale " + std::to_string(lambda) +
                             " m does not exceed the sensor radius " +
                             std::to_string(env.sensor_radius) + " m at wind speed " +
                             std::to_string(wind_speed) + " m/s (limit " +
                             std::to_string(critical_wind_speed(env)) + " m/s)");
  }
  return {lambda, std::log(lambda / env.sensor_radius)};
}

double critical_wind_speed(const Environment& env) {
  // Solve D tau / (1 + V^2 tau / 4D) = a^2 for V.
  const double d = env.diffusivity;
  const double tau = env.particle_lifetime;
  const double a2 = env.sensor_radius * env.sensor_radius;
  const double ratio = d * tau / a2 - 1.0;
  if (ratio <= 0.0) return 0.0;
  return std::sqrt(ratio * 4.0 * d / tau);
}

double encounter_rate(const Point& sensor, const ParameterVector& theta, const Environment& env) {
  return encounter_rate(sensor, theta, env, plume_lambda(env, theta.wind_speed));
}

double encounter_rate(const Point& sensor, const ParameterVector& theta, const Environment& env,
                      const EncounterRateContext& ctx) {
  const double dist = std::max(distance(sensor, theta.position()), env.sensor_radius);
  const double z = dist / ctx.lambda;
  // Advection and Bessel decay are combined in one exponent, which is never
  // positive because 1/lambda > V/2D.
  const double exponent = (theta.x0 - sensor.x) * theta.wind_speed / (2.0 * env.diffusivity) - z;
  return theta.release_rate / ctx.log_norm * std::exp(exponent) * bessel_k0_scaled(z);
}

double mean_count(double rate, const Environment& env) {
  if (!(rate >= 0.0)) throw DomainError("encounter rate must be nonnegative");
  return env.sensing_interval * rate;
}

}  // namespace plumeloc
