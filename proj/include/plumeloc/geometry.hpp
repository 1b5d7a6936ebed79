#pragma once

#include <optional>
#include <span>
#include <vector>

#include "plumeloc/random.hpp"

namespace plumeloc {

/// Planar position in meters.
struct Point {
  double x{0.0};
  double y{0.0};

  friend bool operator==(const Point&, const Point&) = default;
};

double distance(const Point& a, const Point& b);

struct BoundingBox {
  double min_x, min_y, max_x, max_y;

  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
  double area() const { return width() * height(); }
  bool contains(const Point& p) const {
    return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
  }
};

/// Simple polygon, implicitly closed. The constructor rejects fewer than three
/// vertices, non-finite coordinates, zero area and self-intersections.
class Polygon {
 public:
  explicit Polygon(std::vector<Point> vertices);

  std::span<const Point> vertices() const { return vertices_; }
  const BoundingBox& bounds() const { return bounds_; }
  /// Unsigned shoelace area.
  double area() const { return area_; }

  /// Closed-region membership: edges and vertices count as inside.
  bool contains(const Point& p) const;

 private:
  std::vector<Point> vertices_;
  BoundingBox bounds_{};
  double area_{0.0};
};

struct Disc {
  Point center;
  double radius;

  /// Throws ValidationError unless radius > 0 and everything is finite.
  void validate() const;
  bool contains(const Point& p) const { return distance(p, center) <= radius; }
};

/// Support of the source-position prior: (union of polygons) intersected with
/// an optional disc.
class PriorRegion {
 public:
  /// Throws ValidationError for invalid parts, ConfigurationError when the
  /// support has no area (no polygon reaches into the disc).
  PriorRegion(std::vector<Polygon> polygons, std::optional<Disc> disc = std::nullopt);

  std::span<const Polygon> polygons() const { return polygons_; }
  const std::optional<Disc>& disc() const { return disc_; }

  bool contains(const Point& p) const;

  /// Bounding box of the polygon union clipped to the disc's box.
  const BoundingBox& sampling_box() const { return box_; }

  /// True when the polygons are pairwise disjoint (no shared interior).
  bool polygons_disjoint() const { return disjoint_; }

 private:
  std::vector<Polygon> polygons_;
  std::optional<Disc> disc_;
  BoundingBox box_{};
  bool disjoint_{true};
};

bool point_in_polygon(const Point& p, const Polygon& poly);
bool region_contains(const Point& p, const PriorRegion& region);

/// Maximum bounding-box draws per returned point.
inline constexpr long kRejectionBudget = 1'000'000;

/// Uniform draw over the region's support by rejection from its bounding box.
/// Throws SamplingError if `max_draws` candidates are all rejected.
Point sample_region_uniform(const PriorRegion& region, RandomStream& rng,
                            long max_draws = kRejectionBudget);

/// Translate by -origin, then rotate by -alpha_deg. The wind direction alpha
/// (anticlockwise from +x) becomes the +x axis of the result.
Point to_wind_frame(const Point& p, const Point& origin, double alpha_deg);

/// Unsigned area of the convex hull of `points` (0 for fewer than 3 points).
double convex_hull_area(std::span<const Point> points);

/// Convex hull in counter-clockwise order, collinear points dropped.
std::vector<Point> convex_hull(std::span<const Point> points);

}  // namespace plumeloc
