#include "octohull/geometry.hpp"

#include <stdexcept>
#include <string>

namespace octohull {

PolygonLocation point_in_convex_polygon(const Point2D& p,
                                        std::span<const Point2D> poly) {
  if (poly.size() < 3) {
    throw std::invalid_argument(
        "point_in_convex_polygon: polygon needs at least 3 vertices, got " +
        std::to_string(poly.size()));
  }
  bool on_edge = false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2D& a = poly[i];
    const Point2D& b = poly[(i + 1 == poly.size()) ? 0 : i + 1];
    const int o = orientation(a, b, p);
    if (o < 0) return PolygonLocation::Outside;
    if (o == 0) on_edge = true;
  }
  return on_edge ? PolygonLocation::OnBoundary
                 : PolygonLocation::StrictlyInside;
}

void require_finite(std::span<const Point2D> pts) {
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (!std::isfinite(pts[j].x) || !std::isfinite(pts[j].y)) {
      throw std::invalid_argument("non-finite coordinate at point index " +
                                  std::to_string(j));
    }
  }
}

}  // namespace octohull
