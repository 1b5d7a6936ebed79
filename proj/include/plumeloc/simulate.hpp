#pragma once

#include <cstdint>
#include <vector>

#include "plumeloc/dispersion.hpp"
#include "plumeloc/geometry.hpp"
#include "plumeloc/measurement.hpp"
#include "plumeloc/random.hpp"

namespace plumeloc {

/// Poisson variate: sequential inversion for mu <= 30, transformed rejection
/// (PTRS) above. Throws DomainError for negative or non-finite mu.
std::int64_t poisson_sample(double mu, RandomStream& rng);

struct GroundTruth {
  ParameterVector theta;             ///< site frame
  std::vector<Point> sensor_positions;  ///< site frame
  std::uint64_t seed{0};
};

/// Binary readings b_i = [z_i >= 1] with z_i ~ Poisson(mu_i), drawn in sensor
/// order from a stream seeded by `gt.seed`. Each reading keeps its count.
ReadingSet generate_readings(const GroundTruth& gt, const Environment& env);

}  // namespace plumeloc
