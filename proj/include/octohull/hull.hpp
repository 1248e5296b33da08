#pragma once

#include <array>
#include <span>
#include <vector>

#include "octohull/filter.hpp"
#include "octohull/geometry.hpp"
#include "octohull/parallel.hpp"

namespace octohull {

/// Surviving point indices per quadrant, in input order. The four lists
/// are disjoint and their union is exactly the nonzero-label set.
struct QuadQueues {
  std::array<std::vector<std::size_t>, 4> queue;

  std::vector<std::size_t>& operator[](int q) { return queue[q - 1]; }
  const std::vector<std::size_t>& operator[](int q) const {
    return queue[q - 1];
  }
};

/// Convex hull as a CCW cycle of strict vertices (no collinear triples,
/// no duplicates). Degenerate inputs give 1 or 2 vertices.
struct HullPolygon {
  std::vector<Point2D> vertices;

  std::size_t h() const { return vertices.size(); }
};

/// Sequential compaction of the label array into the four index queues.
QuadQueues build_queues(const LabelArray& labels);

/// Convex chain of one quadrant arc. Sorts by the quadrant's sweep key
/// (Q1: x desc then y asc; Q2: y desc then x desc; Q3: x asc then y desc;
/// Q4: y asc then x asc), keeps only strict left turns, and returns the
/// open chain from the quadrant's entry extreme toward its exit extreme.
/// The key-wise last point is the exit and is omitted; callers must
/// include both anchor extremes in the input. Empty input gives an empty
/// chain.
std::vector<Point2D> quadrant_hull(std::vector<Point2D> pts, int quadrant);

/// One full filtered hull computation with stage timings and the label
/// array, for benchmarking and verification.
struct HeaphullRun {
  HullPolygon hull;
  LabelArray labels;
  double filter_ms = 0.0;  // extremes + octagon + label materialization
  double hull_ms = 0.0;    // queue compaction + quadrant chains + assembly
  double total_ms = 0.0;
};

/// Octagon-filtered convex hull: axis extremes, corner extremes, octagon,
/// parallel classification, per-quadrant chains, CCW assembly starting at
/// the east extreme. Throws std::invalid_argument on an empty set;
/// coordinates must be finite (enforced at ingestion).
HeaphullRun heaphull_run(std::span<const Point2D> pts, ReduceEngine& engine);

HullPolygon heaphull(std::span<const Point2D> pts, ReduceEngine& engine);
HullPolygon heaphull(std::span<const Point2D> pts, ReduceConfig cfg = {});

/// Full-set monotone chain (sort + two scans, strict turns only). The
/// independent reference the filtered pipeline is checked against; starts
/// at the lexicographically smallest vertex.
HullPolygon monotone_chain_hull(std::span<const Point2D> pts);

/// Fraction of points discarded by the filter: zeros / n.
double filter_rate(const LabelArray& labels);

/// True when a and b are the same vertex cycle up to rotation
/// (coordinates compared exactly).
bool same_cycle(std::span<const Point2D> a, std::span<const Point2D> b);

}  // namespace octohull
