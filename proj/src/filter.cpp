#include "octohull/filter.hpp"

#include <stdexcept>
#include <utility>

namespace octohull {

AxisExtremes find_axis_extremes(std::span<const Point2D> pts,
                                ReduceEngine& engine) {
  if (pts.empty()) {
    throw std::invalid_argument("find_axis_extremes: empty point set");
  }
  AxisExtremes axis;
  axis.east = engine.argmax_by(pts.size(),
                               [pts](std::size_t j) { return pts[j].x; });
  axis.north = engine.argmax_by(pts.size(),
                                [pts](std::size_t j) { return pts[j].y; });
  axis.west = engine.argmin_by(pts.size(),
                               [pts](std::size_t j) { return pts[j].x; });
  axis.south = engine.argmin_by(pts.size(),
                                [pts](std::size_t j) { return pts[j].y; });
  return axis;
}

CornerExtremes find_corner_extremes(std::span<const Point2D> pts,
                                    const AxisExtremes& axis,
                                    ReduceEngine& engine) {
  const double x_max = pts[axis.east].x;
  const double x_min = pts[axis.west].x;
  const double y_max = pts[axis.north].y;
  const double y_min = pts[axis.south].y;

  auto closest_to = [&](Point2D corner) {
    return engine.argmin_by(pts.size(), [pts, corner](std::size_t j) {
      return manhattan(pts[j], corner);
    });
  };

  CornerExtremes corner;
  corner.ne = closest_to({x_max, y_max});
  corner.nw = closest_to({x_min, y_max});
  corner.sw = closest_to({x_min, y_min});
  corner.se = closest_to({x_max, y_min});
  return corner;
}

ExtremeSet find_extremes(std::span<const Point2D> pts, ReduceEngine& engine) {
  ExtremeSet ext;
  ext.axis = find_axis_extremes(pts, engine);
  ext.corner = find_corner_extremes(pts, ext.axis, engine);
  return ext;
}

Octagon build_octagon(std::span<const Point2D> pts, const ExtremeSet& ext) {
  std::vector<Point2D> cycle;
  cycle.reserve(8);
  for (std::size_t idx : ext.candidates()) cycle.push_back(pts[idx]);

  // drop consecutive (cyclically) duplicate coordinates
  auto dedup = [&] {
    std::vector<Point2D> out;
    for (const Point2D& p : cycle) {
      if (out.empty() || !(out.back() == p)) out.push_back(p);
    }
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    cycle = std::move(out);
  };
  dedup();

  // peel non-strict corners until every remaining triple turns left;
  // at most 8 vertices, so repeated scans are fine
  bool removed = true;
  while (removed && cycle.size() > 2) {
    removed = false;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point2D& prev = cycle[(i + cycle.size() - 1) % cycle.size()];
      const Point2D& next = cycle[(i + 1) % cycle.size()];
      if (orientation(prev, cycle[i], next) <= 0) {
        cycle.erase(cycle.begin() + static_cast<std::ptrdiff_t>(i));
        removed = true;
        break;
      }
    }
  }
  return Octagon{std::move(cycle)};
}

int find_queue(const Point2D& p, const ExtremeSet& ext,
               std::span<const Point2D> pts) {
  const Point2D& e = pts[ext.axis.east];
  const Point2D& n = pts[ext.axis.north];
  const Point2D& w = pts[ext.axis.west];
  const Point2D& s = pts[ext.axis.south];
  if (orientation(e, n, p) < 0) return 1;
  if (orientation(n, w, p) < 0) return 2;
  if (orientation(w, s, p) < 0) return 3;
  if (orientation(s, e, p) < 0) return 4;
  // Inside or on the quadrilateral; reachable only when the octagon is
  // degenerate. Such a point is never a strict hull vertex, so any queue
  // is sound.
  return 1;
}

LabelArray classify_points(std::span<const Point2D> pts, const Octagon& oct,
                           const ExtremeSet& ext, ReduceEngine& engine) {
  // the eight extreme indices always survive, labeled with the quadrant
  // they anchor; first entry wins when one index plays several roles
  const std::array<std::pair<std::size_t, Label>, 8> kept = {{
      {ext.axis.east, 1},
      {ext.corner.ne, 1},
      {ext.axis.north, 2},
      {ext.corner.nw, 2},
      {ext.axis.west, 3},
      {ext.corner.sw, 3},
      {ext.axis.south, 4},
      {ext.corner.se, 4},
  }};
  const bool degenerate = oct.degenerate();
  const std::span<const Point2D> polygon(oct.vertices);

  return engine.map<Label>(pts.size(), [&, pts](std::size_t j) -> Label {
    for (const auto& [idx, label] : kept) {
      if (j == idx) return label;
    }
    if (!degenerate &&
        point_in_convex_polygon(pts[j], polygon) != PolygonLocation::Outside) {
      return 0;
    }
    return static_cast<Label>(find_queue(pts[j], ext, pts));
  });
}

}  // namespace octohull
