#include "plumeloc/prior.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>

#include "plumeloc/error.hpp"

namespace plumeloc {

namespace {

constexpr long kAreaSamples = 1'000'000;
constexpr std::uint64_t kAreaSeed = 0x5eedULL;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ValidationError(std::string("prior ") + name + " must be positive and finite, got " +
                          std::to_string(v));
  }
}

bool polygons_inside_disc(const PriorRegion& region) {
  if (!region.disc()) return true;
  for (const auto& poly : region.polygons()) {
    for (const auto& v : poly.vertices()) {
      if (!region.disc()->contains(v)) return false;
    }
  }
  return true;
}

}  // namespace

struct PriorSpec::AreaCache {
  std::once_flag once;
  double area{0.0};
  bool exact{false};
};

PriorSpec::PriorSpec(PriorRegion region, double gamma_shape, double gamma_scale,
                     double wind_mean, double wind_sd)
    : region_(std::move(region)),
      gamma_shape_(gamma_shape),
      gamma_scale_(gamma_scale),
      wind_mean_(wind_mean),
      wind_sd_(wind_sd),
      area_(std::make_shared<AreaCache>()) {
  require_positive(gamma_shape, "gamma_shape");
  require_positive(gamma_scale, "gamma_scale");
  require_positive(wind_mean, "wind_mean");
  require_positive(wind_sd, "wind_sd");
}

double PriorSpec::support_area() const {
  std::call_once(area_->once, [this] {
    if (region_.polygons_disjoint() && polygons_inside_disc(region_)) {
      double sum = 0.0;
      for (const auto& poly : region_.polygons()) sum += poly.area();
      area_->area = sum;
      area_->exact = true;
      return;
    }
    RandomStream rng(kAreaSeed);
    const BoundingBox& box = region_.sampling_box();
    long hits = 0;
    for (long i = 0; i < kAreaSamples; ++i) {
      const Point p{rng.uniform(box.min_x, box.max_x), rng.uniform(box.min_y, box.max_y)};
      if (region_.contains(p)) ++hits;
    }
    area_->area = box.area() * static_cast<double>(hits) / static_cast<double>(kAreaSamples);
    area_->exact = false;
  });
  return area_->area;
}

bool PriorSpec::support_area_is_exact() const {
  support_area();
  return area_->exact;
}

ParameterVector sample_prior(const PriorSpec& spec, RandomStream& rng) {
  const Point p = sample_region_uniform(spec.region(), rng);
  const double q0 = rng.gamma(spec.gamma_shape(), spec.gamma_scale());
  double v = 0.0;
  long draws = 0;
  do {
    if (++draws > kRejectionBudget) {
      throw SamplingError("truncated wind-speed prior rejected " +
                          std::to_string(kRejectionBudget) + " draws");
    }
    v = rng.normal(spec.wind_mean(), spec.wind_sd());
  } while (!(v > 0.0));
  return {p.x, p.y, q0, v};
}

double gamma_logpdf(double x, double shape, double scale) {
  if (!(x > 0.0)) return kNegInf;
  return (shape - 1.0) * std::log(x) - x / scale - std::lgamma(shape) - shape * std::log(scale);
}

double truncated_normal_logpdf(double x, double mean, double sd) {
  if (!(x > 0.0)) return kNegInf;
  const double z = (x - mean) / sd;
  const double positive_mass = 0.5 * std::erfc(-mean / (sd * std::numbers::sqrt2));
  return -0.5 * z * z - std::log(sd) - 0.5 * std::log(2.0 * std::numbers::pi) -
         std::log(positive_mass);
}

double prior_logpdf(const ParameterVector& theta, const PriorSpec& spec) {
  if (!spec.region().contains(theta.position())) return kNegInf;
  return -std::log(spec.support_area()) +
         gamma_logpdf(theta.release_rate, spec.gamma_shape(), spec.gamma_scale()) +
         truncated_normal_logpdf(theta.wind_speed, spec.wind_mean(), spec.wind_sd());
}

Disc auto_disc(std::span<const Reading> readings, double radius) {
  if (readings.empty()) throw ConfigurationError("cannot place the prior disc without readings");
  double sx = 0.0;
  double sy = 0.0;
  int positives = 0;
  for (const auto& r : readings) {
    if (r.detected == 1) {
      sx += r.position.x;
      sy += r.position.y;
      ++positives;
    }
  }
  if (positives > 0) {
    Disc d{{sx / positives, sy / positives}, radius};
    d.validate();
    return d;
  }
  BoundingBox box{readings[0].position.x, readings[0].position.y, readings[0].position.x,
                  readings[0].position.y};
  for (const auto& r : readings) {
    box.min_x = std::min(box.min_x, r.position.x);
    box.min_y = std::min(box.min_y, r.position.y);
    box.max_x = std::max(box.max_x, r.position.x);
    box.max_y = std::max(box.max_y, r.position.y);
  }
  const double half_w = 0.5 * box.width() + radius;
  const double half_h = 0.5 * box.height() + radius;
  Disc d{{0.5 * (box.min_x + box.max_x), 0.5 * (box.min_y + box.max_y)},
         std::hypot(half_w, half_h)};
  d.validate();
  return d;
}

}  // namespace plumeloc
