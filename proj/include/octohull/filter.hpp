#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "octohull/geometry.hpp"
#include "octohull/parallel.hpp"

namespace octohull {

/// Indices of the four axis-extreme points: argmax x, argmax y, argmin x,
/// argmin y, ties always broken toward the smaller index.
struct AxisExtremes {
  std::size_t east = 0;
  std::size_t north = 0;
  std::size_t west = 0;
  std::size_t south = 0;
};

/// Indices of the points with minimal Manhattan distance to each
/// bounding-box corner.
struct CornerExtremes {
  std::size_t ne = 0;
  std::size_t nw = 0;
  std::size_t sw = 0;
  std::size_t se = 0;
};

/// The eight candidate vertices of the filtering octagon.
struct ExtremeSet {
  AxisExtremes axis;
  CornerExtremes corner;

  /// All eight indices in CCW candidate order, starting at east.
  std::array<std::size_t, 8> candidates() const {
    return {axis.east,  corner.ne, axis.north, corner.nw,
            axis.west,  corner.sw, axis.south, corner.se};
  }
};

/// Filtering polygon. Vertices are input points in strictly convex CCW
/// position. Fewer than 3 vertices means the input was degenerate and the
/// filter discards nothing.
struct Octagon {
  std::vector<Point2D> vertices;

  bool degenerate() const { return vertices.size() < 3; }
};

/// Per-point classification: 0 = discarded, 1..4 = quadrant queue.
using Label = std::uint8_t;
using LabelArray = std::vector<Label>;

/// First reduction pass: the four axis extremes.
/// Throws std::invalid_argument on an empty set.
AxisExtremes find_axis_extremes(std::span<const Point2D> pts,
                                ReduceEngine& engine);

/// Second reduction pass: for each bounding-box corner, the point with
/// minimal Manhattan distance to it. Depends on the first pass, hence the
/// synchronization point between the two.
CornerExtremes find_corner_extremes(std::span<const Point2D> pts,
                                    const AxisExtremes& axis,
                                    ReduceEngine& engine);

/// Both passes in order.
ExtremeSet find_extremes(std::span<const Point2D> pts, ReduceEngine& engine);

/// Walks the CCW candidate cycle [east, ne, north, nw, west, sw, south, se]
/// and keeps only the strictly convex corners. 1 or 2 surviving vertices
/// signal a degenerate input (nothing will be filtered).
Octagon build_octagon(std::span<const Point2D> pts, const ExtremeSet& ext);

/// Quadrant of a point outside the axis-extreme quadrilateral: 1 if
/// strictly right of directed edge east->north, 2 for north->west, 3 for
/// west->south, 4 for south->east, tested in that fixed order. A point
/// matching no edge (possible only in degenerate configurations) falls
/// back to quadrant 1; the per-quadrant chain scans drop any such
/// non-vertex later.
int find_queue(const Point2D& p, const ExtremeSet& ext,
               std::span<const Point2D> pts);

/// Labels every point: 0 when inside or on the boundary of the octagon,
/// otherwise its quadrant. The eight extreme indices are always kept
/// (labeled with the quadrant they anchor) so that octagon vertices
/// survive their own filter. Executed via the engine's parallel map.
LabelArray classify_points(std::span<const Point2D> pts, const Octagon& oct,
                           const ExtremeSet& ext, ReduceEngine& engine);

}  // namespace octohull
