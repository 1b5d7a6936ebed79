#pragma once

#include <cstdint>
#include <optional>
#include <random>

namespace plumeloc {

/// Seeded pseudo-random stream.
///
/// Built on std::mt19937_64, whose output sequence is fixed by the standard.
/// All variate transforms are implemented here rather than through
/// <random> distributions so that a given seed produces the same numbers
/// with every standard library.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  /// Raw 64-bit output.
  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform();
  /// Uniform on (0, 1).
  double uniform_open();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal (Marsaglia polar method).
  double normal();
  double normal(double mean, double sd) { return mean + sd * normal(); }
  /// Gamma with the given shape and scale (Marsaglia-Tsang squeeze).
  double gamma(double shape, double scale);

  /// Independent child stream keyed by `stream_id`.
  RandomStream derive(std::uint64_t stream_id) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

}  // namespace plumeloc
