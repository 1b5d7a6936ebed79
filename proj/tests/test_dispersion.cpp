#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "plumeloc/dispersion.hpp"
#include "plumeloc/error.hpp"

using namespace plumeloc;

namespace {

Environment paper_env() {
  Environment env;
  env.diffusivity = 1.0;
  env.particle_lifetime = 1000.0;
  env.sensor_radius = 0.2;
  env.sensing_interval = 1.0;
  env.wind_direction_deg = 0.0;
  env.wind_mean = 0.28;
  env.wind_sd = 0.2;
  return env;
}

}  // namespace

TEST_CASE("plume_lambda") {
  const Environment env = paper_env();
  // V -> 0 limit: sqrt(D tau).
  CHECK(plume_lambda(env, 1e-12).lambda == doctest::Approx(std::sqrt(1000.0)).epsilon(1e-12));
  // sqrt(1000 / 20.6), 40-digit evaluation.
  const auto ctx = plume_lambda(env, 0.28);
  CHECK(ctx.lambda == doctest::Approx(6.9673301429161766).epsilon(1e-14));
  CHECK(ctx.log_norm == doctest::Approx(std::log(6.9673301429161766 / 0.2)).epsilon(1e-14));
}

TEST_CASE("plume_lambda rejects lambda <= a") {
  const Environment env = paper_env();
  // Analytic threshold: D tau / (1 + V^2 tau / 4D) = a^2  =>  V = sqrt((D tau / a^2 - 1) 4D / tau).
  const double v_crit = std::sqrt((1000.0 / 0.04 - 1.0) * 4.0 / 1000.0);
  CHECK(critical_wind_speed(env) == doctest::Approx(v_crit).epsilon(1e-14));
  CHECK(v_crit == doctest::Approx(9.99979999799996).epsilon(1e-12));
  CHECK_NOTHROW(plume_lambda(env, v_crit * 0.999));
  CHECK_THROWS_AS(plume_lambda(env, v_crit * 1.001), ModelValidityError);
  CHECK_THROWS_AS(plume_lambda(env, 70.0), ModelValidityError);
  CHECK_THROWS_AS(plume_lambda(env, 0.0), DomainError);
}

TEST_CASE("Environment validation") {
  Environment env = paper_env();
  CHECK_NOTHROW(env.validate());
  env.wind_mean = 12.0;
  CHECK_THROWS_AS(env.validate(), ModelValidityError);
  env = paper_env();
  env.diffusivity = 0.0;
  CHECK_THROWS_AS(env.validate(), ValidationError);
  env = paper_env();
  env.wind_sd = -1.0;
  CHECK_THROWS_AS(env.validate(), ValidationError);
}

TEST_CASE("encounter_rate worked example") {
  const Environment env = paper_env();
  const ParameterVector theta{0, 0, 1.0, 0.28};
  // Factors multiplied at 40 digits with mpmath:
  // 1/ln(6.96733/0.2) * exp(-10*0.28/2) * K0(10/6.96733)
  CHECK(encounter_rate({10, 0}, theta, env) == doctest::Approx(0.016156162592767591).epsilon(1e-13));

  // Same value from the independent oracle chain.
  const double lambda = std::sqrt(1000.0 / 20.6);
  const double expected = 1.0 / std::log(lambda / 0.2) * std::exp(-1.4) *
                          boost::math::cyl_bessel_k(0, 10.0 / lambda);
  CHECK(encounter_rate({10, 0}, theta, env) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("encounter_rate at the source is finite via clamping") {
  const Environment env = paper_env();
  const ParameterVector theta{3, 4, 5.0, 0.28};
  const double at_source = encounter_rate({3, 4}, theta, env);
  CHECK(std::isfinite(at_source));
  CHECK(at_source > 0);
  // d is clamped to a, so a sensor exactly a away straight crosswind agrees.
  CHECK(encounter_rate({3, 4.2}, theta, env) == doctest::Approx(at_source).epsilon(1e-12));
}

TEST_CASE("encounter_rate stays finite far upwind and downwind") {
  const Environment env = paper_env();
  const ParameterVector theta{0, 0, 21.0, 0.5};
  for (double x : {-1e5, -1e4, 1e4, 1e5}) {
    const double r = encounter_rate({x, 3}, theta, env);
    CHECK(std::isfinite(r));
    CHECK(r >= 0.0);
  }
}

TEST_CASE("encounter_rate crosswind symmetry and linearity (property)") {
  const Environment env = paper_env();
  RandomStream rng(5);
  for (int i = 0; i < 1000; ++i) {
    const ParameterVector theta{rng.uniform(-50, 50), rng.uniform(-50, 50), rng.uniform(0.1, 50),
                                rng.uniform(0.01, 2.0)};
    const double x = rng.uniform(-200, 200);
    const double dy = rng.uniform(0, 100);
    const double up = encounter_rate({x, theta.y0 + dy}, theta, env);
    const double down = encounter_rate({x, theta.y0 - dy}, theta, env);
    REQUIRE(std::abs(up - down) <= 1e-12 * std::max(up, 1e-300));

    for (double c : {0.5, 2.0, 10.0}) {
      ParameterVector scaled = theta;
      scaled.release_rate *= c;
      const double r = encounter_rate({x, theta.y0 + dy}, scaled, env);
      REQUIRE(std::abs(r - c * up) <= 1e-12 * c * up);
    }
  }
}

TEST_CASE("encounter_rate decreases with crosswind offset") {
  const Environment env = paper_env();
  const ParameterVector theta{0, 0, 10.0, 0.28};
  for (double x : {-100.0, -20.0, 0.0, 20.0}) {
    double prev = encounter_rate({x, 0}, theta, env);
    for (int k = 1; k <= 100; ++k) {
      const double r = encounter_rate({x, 0.5 * k}, theta, env);
      REQUIRE(r <= prev);
      prev = r;
    }
  }
}

TEST_CASE("lambda decreases in wind speed") {
  const Environment env = paper_env();
  double prev = plume_lambda(env, 1e-6).lambda;
  for (int i = 1; i <= 500; ++i) {
    const double l = plume_lambda(env, 0.01 * i).lambda;
    REQUIRE(l < prev);
    prev = l;
  }
}

TEST_CASE("mean_count") {
  Environment env = paper_env();
  CHECK(mean_count(0.0, env) == 0.0);
  CHECK(mean_count(0.37, env) == 0.37);
  env.sensing_interval = 2.0;
  CHECK(mean_count(0.5, env) == 1.0);
  CHECK_THROWS_AS(mean_count(-1.0, env), DomainError);
}
