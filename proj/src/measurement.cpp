#include "plumeloc/measurement.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "plumeloc/error.hpp"

namespace plumeloc {

void validate_readings(std::span<const Reading> readings) {
  for (std::size_t i = 0; i < readings.size(); ++i) {
    const auto& r = readings[i];
    if (!std::isfinite(r.position.x) || !std::isfinite(r.position.y)) {
      throw ValidationError("reading " + std::to_string(i) + " has a non-finite position");
    }
    if (r.detected != 0 && r.detected != 1) {
      throw ValidationError("reading " + std::to_string(i) + " has b = " +
                            std::to_string(r.detected) + ", expected 0 or 1");
    }
  }
}

double detection_prob(double mu) {
  if (!(mu >= 0.0)) throw DomainError("mean count must be nonnegative");
  return -std::expm1(-mu);
}

double log_likelihood(std::span<const Reading> readings, const ParameterVector& theta,
                      const Environment& env) {
  return BinaryLikelihood(readings, env)(theta);
}

BinaryLikelihood::BinaryLikelihood(std::span<const Reading> readings, const Environment& env)
    : env_(env) {
  validate_readings(readings);
  sensors_.reserve(readings.size());
  detected_.reserve(readings.size());
  for (const auto& r : readings) {
    sensors_.push_back(to_wind_frame(r.position, {}, env.wind_direction_deg));
    detected_.push_back(r.detected);
  }
}

double BinaryLikelihood::operator()(const ParameterVector& theta) const {
  if (sensors_.empty()) return 0.0;
  const EncounterRateContext ctx = plume_lambda(env_, theta.wind_speed);
  const Point source = to_wind_frame(theta.position(), {}, env_.wind_direction_deg);
  const ParameterVector local{source.x, source.y, theta.release_rate, theta.wind_speed};

  double total = 0.0;
  for (std::size_t i = 0; i < sensors_.size(); ++i) {
    const double mu = mean_count(encounter_rate(sensors_[i], local, env_, ctx), env_);
    if (detected_[i] == 1) {
      // ln q
      if (mu == 0.0) return -std::numeric_limits<double>::infinity();
      total += std::log(-std::expm1(-mu));
    } else {
      // ln(1 - q) = -mu exactly
      total -= mu;
    }
  }
  return total;
}

}  // namespace plumeloc
