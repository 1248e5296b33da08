#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace octohull {

struct Point2D {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2D&, const Point2D&) = default;
};

/// Dense, index-stable point sequence. Index j refers to the same point
/// for the lifetime of the set.
using PointSet = std::vector<Point2D>;

/// Sign of the cross product (b - a) x (c - a).
/// +1 = counter-clockwise (left turn), -1 = clockwise, 0 = collinear.
///
/// Plain floating determinant, no epsilon: exact for integer-valued and
/// well-separated coordinates. This is the robustness boundary of the
/// library; swap this one function for an adaptive predicate if needed.
inline int orientation(const Point2D& a, const Point2D& b, const Point2D& c) {
  const double det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  if (det > 0.0) return 1;
  if (det < 0.0) return -1;
  return 0;
}

/// |a.x - b.x| + |a.y - b.y|. No square root involved.
inline double manhattan(const Point2D& a, const Point2D& b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

enum class PolygonLocation { StrictlyInside, OnBoundary, Outside };

/// Locate p relative to a strictly convex polygon given as a CCW vertex
/// list. Requires at least 3 vertices; throws std::invalid_argument
/// otherwise.
PolygonLocation point_in_convex_polygon(const Point2D& p,
                                        std::span<const Point2D> poly);

/// Throws std::invalid_argument naming the first offending index if any
/// coordinate is NaN or infinite. Called at ingestion boundaries.
void require_finite(std::span<const Point2D> pts);

}  // namespace octohull
