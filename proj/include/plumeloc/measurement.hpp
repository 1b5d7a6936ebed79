#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "plumeloc/dispersion.hpp"
#include "plumeloc/geometry.hpp"

namespace plumeloc {

/// One binary reading at a site-frame position. `count` carries the
/// simulated encounter count when the reading came from the simulator.
struct Reading {
  Point position;
  int detected{0};  ///< b in {0, 1}
  std::optional<std::int64_t> count;

  friend bool operator==(const Reading&, const Reading&) = default;
};

using ReadingSet = std::vector<Reading>;

/// Throws ValidationError on non-finite positions or b outside {0, 1}.
void validate_readings(std::span<const Reading> readings);

/// Probability of at least one encounter, q = 1 - exp(-mu).
double detection_prob(double mu);

/// Joint Bernoulli log-likelihood of `readings` (site frame) under `theta`.
///
/// Returns -infinity when a detection is paired with an exactly zero rate.
/// An empty reading set yields 0.
double log_likelihood(std::span<const Reading> readings, const ParameterVector& theta,
                      const Environment& env);

/// Log-likelihood evaluator with sensor positions rotated into the wind
/// frame once, for repeated evaluation over many parameter vectors.
class BinaryLikelihood {
 public:
  BinaryLikelihood(std::span<const Reading> readings, const Environment& env);

  /// `theta` is in the site frame.
  double operator()(const ParameterVector& theta) const;

  std::size_t size() const { return sensors_.size(); }

 private:
  Environment env_;
  std::vector<Point> sensors_;  // wind frame
  std::vector<int> detected_;
};

}  // namespace plumeloc
