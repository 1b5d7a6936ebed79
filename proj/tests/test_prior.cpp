#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "plumeloc/error.hpp"
#include "plumeloc/prior.hpp"

using namespace plumeloc;

namespace {

Polygon rect(double x, double y, double w, double h) {
  return Polygon({{x, y}, {x + w, y}, {x + w, y + h}, {x, y + h}});
}

PriorSpec paper_prior() {
  return PriorSpec(PriorRegion({rect(0, 0, 10, 10), rect(30, 0, 10, 20)}), 3.0, 7.0, 0.28, 0.2);
}

// Mean and variance of Normal(m, s) truncated to (0, inf).
void truncated_moments(double m, double s, double& mean, double& var) {
  const double alpha = -m / s;
  const double pdf = std::exp(-0.5 * alpha * alpha) / std::sqrt(2 * std::numbers::pi);
  const double z = 0.5 * std::erfc(alpha / std::numbers::sqrt2);
  const double ratio = pdf / z;
  mean = m + s * ratio;
  var = s * s * (1 + alpha * ratio - ratio * ratio);
}

}  // namespace

TEST_CASE("prior moments match the analytic Gamma and truncated normal") {
  const PriorSpec spec = paper_prior();
  RandomStream rng(2024);
  const int n = 100000;
  double sq = 0, sq2 = 0, sv = 0, sv2 = 0;
  for (int i = 0; i < n; ++i) {
    const ParameterVector p = sample_prior(spec, rng);
    REQUIRE(p.wind_speed > 0.0);
    REQUIRE(region_contains(p.position(), spec.region()));
    REQUIRE(std::isfinite(prior_logpdf(p, spec)));
    sq += p.release_rate;
    sq2 += p.release_rate * p.release_rate;
    sv += p.wind_speed;
    sv2 += p.wind_speed * p.wind_speed;
  }
  // Gamma(3, 7): mean 21, sd 7 sqrt(3); 3 sd/sqrt(n) = 0.115.
  CHECK(std::abs(sq / n - 21.0) < 3 * 7.0 * std::sqrt(3.0) / std::sqrt(double(n)));
  const double var_q = sq2 / n - (sq / n) * (sq / n);
  CHECK(std::abs(var_q - 147.0) < 3 * std::sqrt((2.0 * 147 * 147 + 6.0 * 3 * std::pow(7.0, 4)) / n));

  double vm = 0, vv = 0;
  truncated_moments(0.28, 0.2, vm, vv);
  CHECK(std::abs(sv / n - vm) < 3 * std::sqrt(vv / n));
}

TEST_CASE("position samples are uniform across polygons") {
  // Areas 100 and 200: one third of samples land in the first rectangle.
  const PriorSpec spec = paper_prior();
  RandomStream rng(8);
  const int n = 60000;
  int first = 0;
  for (int i = 0; i < n; ++i) first += sample_prior(spec, rng).x0 < 20.0;
  const double p = 1.0 / 3.0;
  CHECK(std::abs(first / double(n) - p) < 3 * std::sqrt(p * (1 - p) / n));
}

TEST_CASE("prior_logpdf components") {
  const PriorSpec spec = paper_prior();
  CHECK(spec.support_area() == doctest::Approx(300.0));
  CHECK(spec.support_area_is_exact());

  CHECK(prior_logpdf({15, 5, 10, 0.3}, spec) == -std::numeric_limits<double>::infinity());
  CHECK(prior_logpdf({5, 5, -1, 0.3}, spec) == -std::numeric_limits<double>::infinity());
  CHECK(prior_logpdf({5, 5, 10, -0.3}, spec) == -std::numeric_limits<double>::infinity());

  // Gamma(3, 7) density at its mode 14: 14^2 e^-2 / (2 * 7^3), 40-digit value.
  CHECK(std::exp(gamma_logpdf(14.0, 3.0, 7.0)) == doctest::Approx(0.038667223781889341).epsilon(1e-13));

  // Truncation mass ~ 1 when sd << mean: matches the plain normal density.
  const double sd = 0.05;
  const double plain = -std::log(sd * std::sqrt(2 * std::numbers::pi));
  CHECK(std::abs(truncated_normal_logpdf(1.0, 1.0, sd) - plain) < 1e-6);
  // Paper values: tail mass Phi(1.4) is far from one.
  const double mass = 0.5 * std::erfc(-1.4 / std::numbers::sqrt2);
  CHECK(truncated_normal_logpdf(0.28, 0.28, 0.2) ==
        doctest::Approx(-std::log(0.2 * std::sqrt(2 * std::numbers::pi)) - std::log(mass)));

  const double total = prior_logpdf({5, 5, 14, 0.28}, spec);
  CHECK(total == doctest::Approx(-std::log(300.0) + gamma_logpdf(14, 3, 7) +
                                 truncated_normal_logpdf(0.28, 0.28, 0.2)));
}

TEST_CASE("truncated normal density integrates to one") {
  double integral = 0.0;
  const double h = 1e-4;
  for (double v = h / 2; v < 3.0; v += h) integral += std::exp(truncated_normal_logpdf(v, 0.28, 0.2)) * h;
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("support area with a clipping disc uses the Monte Carlo estimate") {
  // Square fully covering a disc of radius 5: area 25 pi.
  const PriorSpec spec(PriorRegion({rect(-10, -10, 20, 20)}, Disc{{0, 0}, 5}), 3, 7, 0.28, 0.2);
  CHECK_FALSE(spec.support_area_is_exact());
  const double exact = 25 * std::numbers::pi;
  // Hit fraction p = pi/4 over 10^6 points.
  const double p = std::numbers::pi / 4;
  CHECK(std::abs(spec.support_area() - exact) < 3 * 100 * std::sqrt(p * (1 - p) / 1e6));

  // Polygons entirely inside the disc keep the exact area.
  const PriorSpec inside(PriorRegion({rect(0, 0, 1, 1)}, Disc{{0.5, 0.5}, 10}), 3, 7, 0.28, 0.2);
  CHECK(inside.support_area_is_exact());
  CHECK(inside.support_area() == 1.0);
}

TEST_CASE("PriorSpec validation") {
  const PriorRegion region({rect(0, 0, 1, 1)});
  CHECK_THROWS_AS(PriorSpec(region, 0, 7, 0.28, 0.2), ValidationError);
  CHECK_THROWS_AS(PriorSpec(region, 3, -7, 0.28, 0.2), ValidationError);
  CHECK_THROWS_AS(PriorSpec(region, 3, 7, 0, 0.2), ValidationError);
  CHECK_THROWS_AS(PriorSpec(region, 3, 7, 0.28, 0), ValidationError);
}

TEST_CASE("auto_disc") {
  const ReadingSet readings{{{0, 0}, 1, std::nullopt},
                            {{10, 20}, 1, std::nullopt},
                            {{100, 100}, 0, std::nullopt}};
  const Disc d = auto_disc(readings);
  CHECK(d.center.x == 5.0);
  CHECK(d.center.y == 10.0);
  CHECK(d.radius == 150.0);
  CHECK(auto_disc(readings, 40.0).radius == 40.0);

  // No detections: circumscribe the sensor box inflated by the radius.
  const ReadingSet none{{{0, 0}, 0, std::nullopt}, {{20, 10}, 0, std::nullopt}};
  const Disc f = auto_disc(none, 100.0);
  CHECK(f.center.x == 10.0);
  CHECK(f.center.y == 5.0);
  CHECK(f.radius == doctest::Approx(std::hypot(110.0, 105.0)));

  CHECK_THROWS_AS(auto_disc({}), ConfigurationError);
}
