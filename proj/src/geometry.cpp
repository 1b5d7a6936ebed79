#include "plumeloc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "plumeloc/error.hpp"

namespace plumeloc {

namespace {

double cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  const double len = std::hypot(b.x - a.x, b.y - a.y);
  const double scale = std::max({1.0, std::abs(a.x), std::abs(a.y), std::abs(b.x), std::abs(b.y)});
  if (std::abs(cross(a, b, p)) > 1e-12 * scale * std::max(len, 1.0)) return false;
  return p.x >= std::min(a.x, b.x) && p.x <= std::max(a.x, b.x) && p.y >= std::min(a.y, b.y) &&
         p.y <= std::max(a.y, b.y);
}

int orientation(const Point& a, const Point& b, const Point& c) {
  const double v = cross(a, b, c);
  return (v > 0.0) - (v < 0.0);
}

bool segments_intersect(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
  const int o1 = orientation(p1, p2, q1);
  const int o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1);
  const int o4 = orientation(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(q1, p1, p2)) return true;
  if (o2 == 0 && on_segment(q2, p1, p2)) return true;
  if (o3 == 0 && on_segment(p1, q1, q2)) return true;
  if (o4 == 0 && on_segment(p2, q1, q2)) return true;
  return false;
}

double segment_distance(const Point& p, const Point& a, const Point& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

bool boxes_overlap(const BoundingBox& a, const BoundingBox& b) {
  return a.min_x <= b.max_x && b.min_x <= a.max_x && a.min_y <= b.max_y && b.min_y <= a.max_y;
}

bool polygons_overlap(const Polygon& a, const Polygon& b) {
  if (!boxes_overlap(a.bounds(), b.bounds())) return false;
  const auto va = a.vertices();
  const auto vb = b.vertices();
  for (std::size_t i = 0; i < va.size(); ++i) {
    const Point& a1 = va[i];
    const Point& a2 = va[(i + 1) % va.size()];
    for (std::size_t j = 0; j < vb.size(); ++j) {
      if (segments_intersect(a1, a2, vb[j], vb[(j + 1) % vb.size()])) return true;
    }
  }
  return a.contains(vb[0]) || b.contains(va[0]);
}

// Positive-area overlap between a polygon and a disc.
bool polygon_meets_disc(const Polygon& poly, const Disc& disc) {
  if (poly.contains(disc.center)) return true;
  const auto v = poly.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (segment_distance(disc.center, v[i], v[(i + 1) % v.size()]) < disc.radius) return true;
  }
  return false;
}

}  // namespace

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) {
    throw ValidationError("polygon needs at least 3 vertices, got " + std::to_string(n));
  }
  bounds_ = {vertices_[0].x, vertices_[0].y, vertices_[0].x, vertices_[0].y};
  double twice_area = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % n];
    if (!std::isfinite(a.x) || !std::isfinite(a.y)) {
      throw ValidationError("polygon vertex " + std::to_string(i) + " is not finite");
    }
    bounds_.min_x = std::min(bounds_.min_x, a.x);
    bounds_.min_y = std::min(bounds_.min_y, a.y);
    bounds_.max_x = std::max(bounds_.max_x, a.x);
    bounds_.max_y = std::max(bounds_.max_y, a.y);
    twice_area += a.x * b.y - b.x * a.y;
  }
  area_ = 0.5 * std::abs(twice_area);
  if (!(area_ > 0.0)) throw ValidationError("polygon has zero area");

  // Non-adjacent edges must not touch.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_intersect(vertices_[i], vertices_[(i + 1) % n], vertices_[j],
                             vertices_[(j + 1) % n])) {
        throw ValidationError("polygon is self-intersecting (edges " + std::to_string(i) +
                              " and " + std::to_string(j) + ")");
      }
    }
  }
}

bool Polygon::contains(const Point& p) const {
  if (!bounds_.contains(p)) return false;
  const std::size_t n = vertices_.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[j];
    if (on_segment(p, a, b)) return true;
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

void Disc::validate() const {
  if (!std::isfinite(center.x) || !std::isfinite(center.y)) {
    throw ValidationError("disc center is not finite");
  }
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw ValidationError("disc radius must be positive, got " + std::to_string(radius));
  }
}

PriorRegion::PriorRegion(std::vector<Polygon> polygons, std::optional<Disc> disc)
    : polygons_(std::move(polygons)), disc_(disc) {
  if (polygons_.empty()) throw ConfigurationError("prior region has no polygons");
  if (disc_) disc_->validate();

  bool any = false;
  for (const auto& poly : polygons_) {
    if (disc_ && !polygon_meets_disc(poly, *disc_)) continue;
    const auto& b = poly.bounds();
    if (!any) {
      box_ = b;
      any = true;
    } else {
      box_.min_x = std::min(box_.min_x, b.min_x);
      box_.min_y = std::min(box_.min_y, b.min_y);
      box_.max_x = std::max(box_.max_x, b.max_x);
      box_.max_y = std::max(box_.max_y, b.max_y);
    }
  }
  if (!any) {
    throw ConfigurationError("prior support is empty: no polygon overlaps the disc");
  }
  if (disc_) {
    box_.min_x = std::max(box_.min_x, disc_->center.x - disc_->radius);
    box_.min_y = std::max(box_.min_y, disc_->center.y - disc_->radius);
    box_.max_x = std::min(box_.max_x, disc_->center.x + disc_->radius);
    box_.max_y = std::min(box_.max_y, disc_->center.y + disc_->radius);
  }

  for (std::size_t i = 0; i < polygons_.size() && disjoint_; ++i) {
    for (std::size_t j = i + 1; j < polygons_.size(); ++j) {
      if (polygons_overlap(polygons_[i], polygons_[j])) {
        disjoint_ = false;
        break;
      }
    }
  }
}

bool PriorRegion::contains(const Point& p) const {
  if (disc_ && !disc_->contains(p)) return false;
  return std::any_of(polygons_.begin(), polygons_.end(),
                     [&](const Polygon& poly) { return poly.contains(p); });
}

bool point_in_polygon(const Point& p, const Polygon& poly) { return poly.contains(p); }

bool region_contains(const Point& p, const PriorRegion& region) { return region.contains(p); }

Point sample_region_uniform(const PriorRegion& region, RandomStream& rng, long max_draws) {
  const BoundingBox& box = region.sampling_box();
  for (long i = 0; i < max_draws; ++i) {
    const Point p{rng.uniform(box.min_x, box.max_x), rng.uniform(box.min_y, box.max_y)};
    if (region.contains(p)) return p;
  }
  throw SamplingError("uniform region sampling rejected " + std::to_string(max_draws) +
                      " candidates from a " + std::to_string(box.width()) + " x " +
                      std::to_string(box.height()) +
                      " m box; the prior support is a vanishing fraction of it");
}

Point to_wind_frame(const Point& p, const Point& origin, double alpha_deg) {
  const double a = alpha_deg * std::numbers::pi / 180.0;
  const double c = std::cos(a);
  const double s = std::sin(a);
  const double dx = p.x - origin.x;
  const double dy = p.y - origin.y;
  return {c * dx + s * dy, -s * dx + c * dy};
}

std::vector<Point> convex_hull(std::span<const Point> points) {
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(),
            [](const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;

  // Andrew's monotone chain.
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

double convex_hull_area(std::span<const Point> points) {
  const auto hull = convex_hull(points);
  if (hull.size() < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point& a = hull[i];
    const Point& b = hull[(i + 1) % hull.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * std::abs(twice);
}

}  // namespace plumeloc
