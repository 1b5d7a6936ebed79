#include "plumeloc/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "plumeloc/error.hpp"

namespace plumeloc {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ValidationError(path + ": " + what);
}

void check_keys(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) fail(path + "." + key, "unknown field");
  }
}

double number(const json& obj, const std::string& key, const std::string& path,
              std::optional<double> fallback = std::nullopt) {
  const std::string field = path + "." + key;
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    fail(field, "required field missing");
  }
  const json& v = obj.at(key);
  if (!v.is_number()) fail(field, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(field, "not finite");
  return d;
}

double positive(const json& obj, const std::string& key, const std::string& path,
                std::optional<double> fallback = std::nullopt) {
  const double d = number(obj, key, path, fallback);
  if (!(d > 0.0)) fail(path + "." + key, "must be > 0, got " + std::to_string(d));
  return d;
}

Point point(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    fail(path, "expected [x, y]");
  }
  const Point p{v[0].get<double>(), v[1].get<double>()};
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) fail(path, "not finite");
  return p;
}

std::vector<Point> points(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of [x, y]");
  std::vector<Point> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(point(v[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

template <typename Int>
Int integer(const json& obj, const std::string& key, const std::string& path, Int fallback,
            Int minimum) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  const std::string field = path + "." + key;
  if (!v.is_number_integer()) fail(field, "expected an integer");
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    if (u < static_cast<std::uint64_t>(minimum)) fail(field, "must be >= " + std::to_string(minimum));
    return static_cast<Int>(u);
  }
  const auto s = v.get<std::int64_t>();
  if (s < static_cast<std::int64_t>(minimum)) fail(field, "must be >= " + std::to_string(minimum));
  return static_cast<Int>(s);
}

Environment parse_environment(const json& obj) {
  const std::string path = "environment";
  check_keys(obj, path,
             {"diffusivity_m2_per_s", "particle_lifetime_s", "sensor_radius_m",
              "sensing_interval_s", "wind_direction_deg", "wind_mean_m_per_s",
              "wind_sd_m_per_s"});
  Environment env;
  env.diffusivity = positive(obj, "diffusivity_m2_per_s", path, 1.0);
  env.particle_lifetime = positive(obj, "particle_lifetime_s", path, 1000.0);
  env.sensor_radius = positive(obj, "sensor_radius_m", path, 0.2);
  env.sensing_interval = positive(obj, "sensing_interval_s", path, 1.0);
  env.wind_direction_deg = number(obj, "wind_direction_deg", path);
  env.wind_mean = positive(obj, "wind_mean_m_per_s", path);
  env.wind_sd = positive(obj, "wind_sd_m_per_s", path, 0.2);
  try {
    env.validate();
  } catch (const ModelValidityError& e) {
    fail(path + ".wind_mean_m_per_s",
         std::string("encounter-rate model requires lambda > sensor radius: ") + e.what());
  }
  return env;
}

DiscSetting parse_disc(const json& obj) {
  const std::string path = "prior.disc";
  check_keys(obj, path, {"mode", "radius_m", "center_m"});
  DiscSetting d;
  const std::string mode = obj.value("mode", std::string("auto"));
  if (mode == "auto") {
    d.mode = DiscMode::kAuto;
    d.radius = positive(obj, "radius_m", path, kDefaultDiscRadius);
  } else if (mode == "fixed") {
    d.mode = DiscMode::kFixed;
    d.radius = positive(obj, "radius_m", path);
    if (!obj.contains("center_m")) fail(path + ".center_m", "required for mode \"fixed\"");
    d.center = point(obj.at("center_m"), path + ".center_m");
  } else if (mode == "none") {
    d.mode = DiscMode::kNone;
  } else {
    fail(path + ".mode", "expected \"auto\", \"fixed\" or \"none\", got \"" + mode + "\"");
  }
  return d;
}

GroundTruth parse_ground_truth(const json& obj, std::uint64_t default_seed) {
  const std::string path = "ground_truth";
  check_keys(obj, path, {"x0_m", "y0_m", "q0", "v_m_per_s", "sensor_positions_m", "seed"});
  GroundTruth gt;
  gt.theta.x0 = number(obj, "x0_m", path);
  gt.theta.y0 = number(obj, "y0_m", path);
  gt.theta.release_rate = positive(obj, "q0", path);
  gt.theta.wind_speed = positive(obj, "v_m_per_s", path);
  if (!obj.contains("sensor_positions_m")) fail(path + ".sensor_positions_m", "required field missing");
  gt.sensor_positions = points(obj.at("sensor_positions_m"), path + ".sensor_positions_m");
  gt.seed = integer<std::uint64_t>(obj, "seed", path, default_seed, 0);
  return gt;
}

}  // namespace

PriorSpec Scenario::build_prior(std::span<const Reading> readings) const {
  std::optional<Disc> d;
  switch (disc.mode) {
    case DiscMode::kAuto:
      d = auto_disc(readings, disc.radius);
      break;
    case DiscMode::kFixed:
      d = Disc{disc.center, disc.radius};
      break;
    case DiscMode::kNone:
      break;
  }
  return PriorSpec(PriorRegion(polygons, d), gamma_shape, gamma_scale, environment.wind_mean,
                   environment.wind_sd);
}

void Scenario::override_seed(std::uint64_t new_seed) {
  seed = new_seed;
  if (ground_truth) ground_truth->seed = new_seed;
}

Scenario parse_scenario(const json& doc, const std::filesystem::path& base_dir) {
  check_keys(doc, "scenario", {"environment", "prior", "readings_csv", "ground_truth", "inference"});
  Scenario s;

  if (!doc.contains("environment")) fail("environment", "required section missing");
  s.environment = parse_environment(doc.at("environment"));

  const json& inf = doc.value("inference", json::object());
  check_keys(inf, "inference", {"samples", "seed", "threads"});
  s.samples = integer<std::size_t>(inf, "samples", "inference", kDefaultSampleCount, 1);
  s.seed = integer<std::uint64_t>(inf, "seed", "inference", 0, 0);
  s.threads = integer<unsigned>(inf, "threads", "inference", 0, 0);

  if (!doc.contains("prior")) fail("prior", "required section missing");
  const json& prior = doc.at("prior");
  check_keys(prior, "prior", {"polygons_m", "disc", "gamma_shape", "gamma_scale"});
  if (!prior.contains("polygons_m") || !prior.at("polygons_m").is_array()) {
    fail("prior.polygons_m", "required array of polygons missing");
  }
  const json& polys = prior.at("polygons_m");
  if (polys.empty()) fail("prior.polygons_m", "at least one polygon is required");
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const std::string path = "prior.polygons_m[" + std::to_string(i) + "]";
    try {
      s.polygons.emplace_back(points(polys[i], path));
    } catch (const ValidationError& e) {
      const std::string what = e.what();
      throw ValidationError(what.starts_with(path) ? what : path + ": " + what);
    }
  }
  if (prior.contains("disc")) s.disc = parse_disc(prior.at("disc"));
  s.gamma_shape = positive(prior, "gamma_shape", "prior", 3.0);
  s.gamma_scale = positive(prior, "gamma_scale", "prior", 7.0);

  if (s.disc.mode != DiscMode::kAuto) {
    // The support does not depend on readings, so check it now.
    try {
      s.build_prior({});
    } catch (const Error& e) {
      fail("prior", e.what());
    }
  }

  if (doc.contains("readings_csv")) {
    if (!doc.at("readings_csv").is_string()) fail("readings_csv", "expected a path string");
    std::filesystem::path p = doc.at("readings_csv").get<std::string>();
    s.readings_path = p.is_absolute() ? p : base_dir / p;
  }
  if (doc.contains("ground_truth")) {
    s.ground_truth = parse_ground_truth(doc.at("ground_truth"), s.seed);
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("scenario " + path.string() + ": " + e.what());
  }
  return parse_scenario(doc, path.parent_path());
}

}  // namespace plumeloc
