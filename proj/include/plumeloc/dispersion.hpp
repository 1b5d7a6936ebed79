#pragma once

#include "plumeloc/geometry.hpp"

namespace plumeloc {

/// Physical and sensor constants, plus the meteorological wind estimate.
struct Environment {
  double diffusivity{1.0};         ///< D, m^2/s
  double particle_lifetime{1000.0};  ///< tau, s
  double sensor_radius{0.2};       ///< a, m
  double sensing_interval{1.0};    ///< t0, s
  double wind_direction_deg{0.0};  ///< alpha, anticlockwise from +x
  double wind_mean{1.0};           ///< mean wind speed, m/s
  double wind_sd{0.2};             ///< wind speed uncertainty, m/s

  /// Positivity of every constant, finiteness of alpha, and lambda > a at the
  /// mean wind speed. Throws ValidationError or ModelValidityError.
  void validate() const;
};

/// Source parameters. `release_rate` is the emission rate normalized by the
/// (unknown) detection threshold of the sensor; only this ratio is
/// identifiable from binary readings.
struct ParameterVector {
  double x0{0.0};
  double y0{0.0};
  double release_rate{1.0};  ///< Q0
  double wind_speed{1.0};    ///< V, m/s

  Point position() const { return {x0, y0}; }
  void validate() const;

  friend bool operator==(const ParameterVector&, const ParameterVector&) = default;
};

/// Wind-speed dependent factors of the encounter rate.
struct EncounterRateContext {
  double lambda;    ///< plume length scale, m
  double log_norm;  ///< ln(lambda / a), > 0
};

/// lambda = sqrt(D tau / (1 + V^2 tau / 4D)). Throws ModelValidityError when
/// lambda <= a, DomainError when V is not positive.
EncounterRateContext plume_lambda(const Environment& env, double wind_speed);

/// Wind speed at which lambda falls to the sensor radius.
double critical_wind_speed(const Environment& env);

/// Expected particle encounters per second at `sensor`.
///
/// Both `sensor` and the source in `theta` must be in the wind-aligned frame
/// (mean wind along +x). The source distance is clamped below at the sensor
/// radius, so the result is finite and nonnegative everywhere.
double encounter_rate(const Point& sensor, const ParameterVector& theta, const Environment& env);

/// Same as above with lambda already computed for theta.wind_speed.
double encounter_rate(const Point& sensor, const ParameterVector& theta, const Environment& env,
                      const EncounterRateContext& ctx);

/// Expected count over one sensing interval, mu = t0 * rate.
double mean_count(double rate, const Environment& env);

}  // namespace plumeloc
