#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "plumeloc/dispersion.hpp"
#include "plumeloc/geometry.hpp"
#include "plumeloc/measurement.hpp"
#include "plumeloc/prior.hpp"
#include "plumeloc/simulate.hpp"

namespace plumeloc {

inline constexpr std::size_t kDefaultSampleCount = 5000;

enum class DiscMode { kAuto, kFixed, kNone };

struct DiscSetting {
  DiscMode mode{DiscMode::kAuto};
  double radius{kDefaultDiscRadius};
  Point center{};  ///< used by kFixed only
};

/// Everything needed for a simulation or estimation run.
struct Scenario {
  Environment environment;
  std::vector<Polygon> polygons;
  DiscSetting disc;
  double gamma_shape{3.0};
  double gamma_scale{7.0};
  /// Resolved against the scenario file's directory.
  std::optional<std::filesystem::path> readings_path;
  std::optional<GroundTruth> ground_truth;
  std::size_t samples{kDefaultSampleCount};
  std::uint64_t seed{0};
  unsigned threads{0};

  /// Prior for a given reading set; the auto disc is placed from `readings`.
  PriorSpec build_prior(std::span<const Reading> readings) const;

  /// Replace the run seed everywhere it is used, including the ground truth.
  void override_seed(std::uint64_t new_seed);
};

/// Parse and validate. Errors name the offending field path, e.g.
/// "prior.polygons_m[1]: polygon needs at least 3 vertices, got 2".
Scenario parse_scenario(const nlohmann::json& doc,
                        const std::filesystem::path& base_dir = {});

/// Throws ParseError for unreadable or malformed JSON, ValidationError for
/// invalid content.
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace plumeloc
