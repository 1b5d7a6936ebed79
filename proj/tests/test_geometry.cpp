#include <doctest.h>

#include <cmath>

#include "plumeloc/error.hpp"
#include "plumeloc/geometry.hpp"

using namespace plumeloc;

namespace {

Polygon square(double x, double y, double side) {
  return Polygon({{x, y}, {x + side, y}, {x + side, y + side}, {x, y + side}});
}

}  // namespace

TEST_CASE("point_in_polygon on the unit square") {
  const Polygon sq = square(0, 0, 1);
  CHECK(point_in_polygon({0.5, 0.5}, sq));
  CHECK_FALSE(point_in_polygon({2, 2}, sq));
  CHECK(point_in_polygon({1, 0.5}, sq));  // edge
  CHECK(point_in_polygon({0, 0}, sq));    // vertex
  CHECK(point_in_polygon({0.5, 1}, sq));
  CHECK_FALSE(point_in_polygon({1.0000001, 0.5}, sq));
}

TEST_CASE("point_in_polygon on a concave polygon") {
  // U shape open at the top.
  const Polygon u({{0, 0}, {3, 0}, {3, 3}, {2, 3}, {2, 1}, {1, 1}, {1, 3}, {0, 3}});
  CHECK(point_in_polygon({0.5, 2}, u));
  CHECK(point_in_polygon({2.5, 2}, u));
  CHECK_FALSE(point_in_polygon({1.5, 2}, u));
  CHECK(point_in_polygon({1.5, 0.5}, u));
  CHECK(point_in_polygon({1.5, 1}, u));  // inner edge
  CHECK(u.area() == doctest::Approx(7.0));
}

TEST_CASE("polygon validation") {
  CHECK_THROWS_AS(Polygon({{0, 0}, {1, 0}}), ValidationError);
  CHECK_THROWS_AS(Polygon({{0, 0}, {1, 0}, {2, 0}}), ValidationError);  // zero area
  // Bow tie.
  CHECK_THROWS_AS(Polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), ValidationError);
  CHECK_THROWS_AS(Polygon({{0, 0}, {NAN, 0}, {1, 1}}), ValidationError);
  CHECK_NOTHROW(Polygon({{0, 0}, {1, 0}, {0, 1}}));
}

TEST_CASE("region_contains") {
  const PriorRegion near({square(0, 0, 1)}, Disc{{0.5, 0.5}, 10});
  CHECK(region_contains({0.5, 0.5}, near));

  // A disjoint disc leaves no support at all.
  CHECK_THROWS_AS(PriorRegion({square(0, 0, 1)}, Disc{{100, 100}, 1}), ConfigurationError);

  // Membership still respects the disc when only part of the support overlaps.
  const PriorRegion two({square(0, 0, 1), square(5, 5, 1)}, Disc{{5.5, 5.5}, 2});
  CHECK(region_contains({5.5, 5.5}, two));
  CHECK_FALSE(region_contains({0.5, 0.5}, two));

  const PriorRegion both({square(0, 0, 1), square(5, 5, 1)});
  CHECK(region_contains({5.2, 5.9}, both));
  CHECK(region_contains({0.1, 0.1}, both));
  CHECK_FALSE(region_contains({3, 3}, both));
  CHECK(both.polygons_disjoint());
  CHECK_FALSE(PriorRegion({square(0, 0, 2), square(1, 1, 2)}).polygons_disjoint());
}

TEST_CASE("degenerate disc is rejected") {
  CHECK_THROWS_AS(PriorRegion({square(0, 0, 1)}, Disc{{0.5, 0.5}, 0}), ValidationError);
  CHECK_THROWS_AS(PriorRegion({square(0, 0, 1)}, Disc{{0.5, 0.5}, -1}), ValidationError);
  CHECK_THROWS_AS(PriorRegion({}, std::nullopt), ConfigurationError);
}

TEST_CASE("sample_region_uniform stays in the support and is uniform") {
  const PriorRegion region({square(0, 0, 1)});
  RandomStream rng(7);
  const int n = 100000;
  double sx = 0, sy = 0;
  for (int i = 0; i < n; ++i) {
    const Point p = sample_region_uniform(region, rng);
    REQUIRE(p.x >= 0.0);
    REQUIRE(p.x <= 1.0);
    REQUIRE(p.y >= 0.0);
    REQUIRE(p.y <= 1.0);
    sx += p.x;
    sy += p.y;
  }
  // sigma/sqrt(n) = 0.2887/316 ~ 0.0009; 0.01 is > 10 sigma.
  CHECK(std::abs(sx / n - 0.5) < 0.01);
  CHECK(std::abs(sy / n - 0.5) < 0.01);
}

TEST_CASE("sampled points always pass region_contains") {
  const PriorRegion region({square(0, 0, 10), square(20, 0, 10), Polygon({{0, 20}, {10, 20}, {5, 28}})},
                           Disc{{10, 10}, 12});
  RandomStream rng(11);
  for (int i = 0; i < 20000; ++i) REQUIRE(region_contains(sample_region_uniform(region, rng), region));
}

TEST_CASE("rejection acceptance rate matches the area ratio") {
  // Two unit squares spanning a 3 x 1 box: acceptance 2/3.
  const PriorRegion region({square(0, 0, 1), square(2, 0, 1)});
  const BoundingBox& box = region.sampling_box();
  CHECK(box.area() == doctest::Approx(3.0));
  RandomStream rng(3);
  const int n = 200000;
  int hits = 0;
  for (int i = 0; i < n; ++i) {
    const Point p{rng.uniform(box.min_x, box.max_x), rng.uniform(box.min_y, box.max_y)};
    hits += region.contains(p);
  }
  const double p = 2.0 / 3.0;
  const double se = std::sqrt(p * (1 - p) / n);
  CHECK(std::abs(hits / double(n) - p) < 3 * se);
}

TEST_CASE("rejection budget produces a diagnosable error") {
  // Thin sliver inside a tall box.
  const PriorRegion region({Polygon({{0, 0}, {1, 0}, {1, 1e-9}}), square(0, 1000, 1e-3)});
  RandomStream rng(1);
  CHECK_THROWS_AS(sample_region_uniform(region, rng, 1000), SamplingError);
}

TEST_CASE("to_wind_frame") {
  const Point p{3.5, -1.25};
  const Point id = to_wind_frame(p, {}, 0.0);
  CHECK(id.x == doctest::Approx(p.x));
  CHECK(id.y == doctest::Approx(p.y));

  const Point r90 = to_wind_frame({1, 0}, {}, 90.0);
  CHECK(r90.x == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(std::abs(r90.x) < 1e-15);
  CHECK(r90.y == doctest::Approx(-1.0));

  // cos/sin of 195 degrees, evaluated at 40 digits with mpmath.
  const Point r195 = to_wind_frame({1, 0}, {}, 195.0);
  CHECK(r195.x == doctest::Approx(-0.96592582628906829).epsilon(1e-14));
  CHECK(r195.y == doctest::Approx(0.25881904510252076).epsilon(1e-14));

  // Wind direction itself maps to +x.
  const Point along = to_wind_frame({std::cos(1.0), std::sin(1.0)}, {}, 180.0 / 3.14159265358979323846);
  CHECK(along.x == doctest::Approx(1.0));
  CHECK(std::abs(along.y) < 1e-12);

  const Point shifted = to_wind_frame({11, 22}, {10, 20}, 0.0);
  CHECK(shifted.x == doctest::Approx(1.0));
  CHECK(shifted.y == doctest::Approx(2.0));
}

TEST_CASE("to_wind_frame round trip and isometry (property)") {
  RandomStream rng(99);
  for (int i = 0; i < 2000; ++i) {
    const Point p{rng.uniform(-1000, 1000), rng.uniform(-1000, 1000)};
    const Point q{rng.uniform(-1000, 1000), rng.uniform(-1000, 1000)};
    const Point o{rng.uniform(-500, 500), rng.uniform(-500, 500)};
    const double alpha = rng.uniform(-720, 720);

    const Point f = to_wind_frame(p, o, alpha);
    const Point back = to_wind_frame(f, {}, -alpha);
    REQUIRE(std::abs(back.x + o.x - p.x) < 1e-9);
    REQUIRE(std::abs(back.y + o.y - p.y) < 1e-9);

    const Point fq = to_wind_frame(q, o, alpha);
    REQUIRE(std::abs(distance(p, q) - distance(f, fq)) < 1e-9);
  }
}

TEST_CASE("convex hull area") {
  std::vector<Point> pts{{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}, {1, 0}, {0.5, 1.5}};
  CHECK(convex_hull_area(pts) == doctest::Approx(4.0));
  CHECK(convex_hull(pts).size() == 4);
  std::vector<Point> line{{0, 0}, {1, 1}, {2, 2}};
  CHECK(convex_hull_area(line) == 0.0);
  CHECK(convex_hull_area(std::span<const Point>{}) == 0.0);
}
