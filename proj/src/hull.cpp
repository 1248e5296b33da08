#include "octohull/hull.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <utility>

namespace octohull {
namespace {

using Clock = std::chrono::steady_clock;

double ms_between(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

// CCW sweep order of each quadrant arc
bool quadrant_less(const Point2D& a, const Point2D& b, int quadrant) {
  switch (quadrant) {
    case 1:  // east -> north
      return a.x != b.x ? a.x > b.x : a.y < b.y;
    case 2:  // north -> west
      return a.y != b.y ? a.y > b.y : a.x > b.x;
    case 3:  // west -> south
      return a.x != b.x ? a.x < b.x : a.y > b.y;
    default:  // south -> east
      return a.y != b.y ? a.y < b.y : a.x < b.x;
  }
}

bool lex_less(const Point2D& a, const Point2D& b) {
  return a.x != b.x ? a.x < b.x : a.y < b.y;
}

// preferred first vertex of an output cycle: the east extreme
// (max x, ties toward smaller y)
bool starts_before(const Point2D& a, const Point2D& b) {
  return a.x != b.x ? a.x > b.x : a.y < b.y;
}

void rotate_to_start(std::vector<Point2D>& cycle) {
  if (cycle.size() < 2) return;
  std::size_t best = 0;
  for (std::size_t i = 1; i < cycle.size(); ++i) {
    if (starts_before(cycle[i], cycle[best])) best = i;
  }
  std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(best),
              cycle.end());
}

// Removes every non-strict vertex from an almost-convex CCW cycle.
// Neighbors of a removed vertex are rechecked, so seam defects of any
// depth are peeled in O(size + removals).
std::vector<Point2D> strict_cycle(const std::vector<Point2D>& cycle) {
  const std::size_t m = cycle.size();
  std::vector<std::size_t> prev(m), next(m);
  std::vector<char> alive(m, 1), queued(m, 1);
  std::vector<std::size_t> work(m);
  for (std::size_t i = 0; i < m; ++i) {
    prev[i] = (i + m - 1) % m;
    next[i] = (i + 1) % m;
    work[i] = i;
  }
  std::size_t alive_count = m;
  while (!work.empty() && alive_count > 2) {
    const std::size_t i = work.back();
    work.pop_back();
    queued[i] = 0;
    if (!alive[i]) continue;
    if (orientation(cycle[prev[i]], cycle[i], cycle[next[i]]) > 0) continue;
    alive[i] = 0;
    --alive_count;
    next[prev[i]] = next[i];
    prev[next[i]] = prev[i];
    for (std::size_t nb : {prev[i], next[i]}) {
      if (alive[nb] && !queued[nb]) {
        work.push_back(nb);
        queued[nb] = 1;
      }
    }
  }
  std::vector<Point2D> out;
  out.reserve(alive_count);
  std::size_t start = 0;
  while (!alive[start]) ++start;
  std::size_t i = start;
  do {
    out.push_back(cycle[i]);
    i = next[i];
  } while (i != start);
  return out;
}

HullPolygon finalize_cycle(std::vector<Point2D> cycle) {
  // consecutive duplicates (including across the wrap) collapse first
  std::vector<Point2D> dedup;
  dedup.reserve(cycle.size());
  for (const Point2D& p : cycle) {
    if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(p);
  }
  while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();

  if (dedup.size() > 2) {
    // fully collinear cycles reduce to their two extreme endpoints; the
    // generic cleanup below must not see them (no strict vertex exists)
    bool collinear = true;
    for (std::size_t k = 2; k < dedup.size() && collinear; ++k) {
      collinear = orientation(dedup[0], dedup[1], dedup[k]) == 0;
    }
    if (collinear) {
      auto [lo, hi] = std::minmax_element(dedup.begin(), dedup.end(),
                                          lex_less);
      dedup = {*lo, *hi};
    } else {
      dedup = strict_cycle(dedup);
    }
  }
  rotate_to_start(dedup);
  return HullPolygon{std::move(dedup)};
}

}  // namespace

QuadQueues build_queues(const LabelArray& labels) {
  QuadQueues queues;
  for (std::size_t j = 0; j < labels.size(); ++j) {
    const Label l = labels[j];
    if (l != 0) queues.queue[l - 1].push_back(j);
  }
  return queues;
}

std::vector<Point2D> quadrant_hull(std::vector<Point2D> pts, int quadrant) {
  if (pts.empty()) return {};
  std::sort(pts.begin(), pts.end(), [quadrant](const Point2D& a,
                                               const Point2D& b) {
    return quadrant_less(a, b, quadrant);
  });
  std::vector<Point2D> chain;
  chain.reserve(pts.size());
  for (const Point2D& p : pts) {
    while (chain.size() >= 2 &&
           orientation(chain[chain.size() - 2], chain.back(), p) <= 0) {
      chain.pop_back();
    }
    chain.push_back(p);
  }
  chain.pop_back();  // key-wise last point is the exit extreme
  return chain;
}

HeaphullRun heaphull_run(std::span<const Point2D> pts, ReduceEngine& engine) {
  if (pts.empty()) {
    throw std::invalid_argument("heaphull: empty point set");
  }
  const auto t0 = Clock::now();

  const ExtremeSet ext = find_extremes(pts, engine);
  const Octagon oct = build_octagon(pts, ext);
  LabelArray labels = classify_points(pts, oct, ext, engine);

  const auto t1 = Clock::now();

  const QuadQueues queues = build_queues(labels);
  const Point2D east = pts[ext.axis.east];
  const Point2D north = pts[ext.axis.north];
  const Point2D west = pts[ext.axis.west];
  const Point2D south = pts[ext.axis.south];
  const std::array<Point2D, 4> entry = {east, north, west, south};
  const std::array<Point2D, 4> exit = {north, west, south, east};

  std::vector<Point2D> cycle;
  for (int q = 1; q <= 4; ++q) {
    const auto& members = queues[q];
    std::vector<Point2D> cand;
    cand.reserve(members.size() + 2);
    cand.push_back(entry[static_cast<std::size_t>(q - 1)]);
    for (std::size_t idx : members) cand.push_back(pts[idx]);
    cand.push_back(exit[static_cast<std::size_t>(q - 1)]);
    const std::vector<Point2D> chain = quadrant_hull(std::move(cand), q);
    cycle.insert(cycle.end(), chain.begin(), chain.end());
  }
  HullPolygon hull = finalize_cycle(std::move(cycle));

  const auto t2 = Clock::now();

  HeaphullRun run;
  run.hull = std::move(hull);
  run.labels = std::move(labels);
  run.filter_ms = ms_between(t0, t1);
  run.hull_ms = ms_between(t1, t2);
  run.total_ms = ms_between(t0, t2);
  return run;
}

HullPolygon heaphull(std::span<const Point2D> pts, ReduceEngine& engine) {
  return std::move(heaphull_run(pts, engine).hull);
}

HullPolygon heaphull(std::span<const Point2D> pts, ReduceConfig cfg) {
  ReduceEngine engine(cfg);
  return heaphull(pts, engine);
}

HullPolygon monotone_chain_hull(std::span<const Point2D> pts) {
  if (pts.empty()) {
    throw std::invalid_argument("monotone_chain_hull: empty point set");
  }
  std::vector<Point2D> s(pts.begin(), pts.end());
  std::sort(s.begin(), s.end(), lex_less);
  s.erase(std::unique(s.begin(), s.end()), s.end());

  if (s.size() <= 2) return HullPolygon{std::move(s)};

  auto scan = [](auto first, auto last, std::vector<Point2D>& chain) {
    for (auto it = first; it != last; ++it) {
      while (chain.size() >= 2 &&
             orientation(chain[chain.size() - 2], chain.back(), *it) <= 0) {
        chain.pop_back();
      }
      chain.push_back(*it);
    }
  };

  std::vector<Point2D> lower, upper;
  scan(s.begin(), s.end(), lower);
  scan(s.rbegin(), s.rend(), upper);

  std::vector<Point2D> cycle(lower.begin(), lower.end() - 1);
  cycle.insert(cycle.end(), upper.begin(), upper.end() - 1);
  return HullPolygon{std::move(cycle)};
}

double filter_rate(const LabelArray& labels) {
  if (labels.empty()) {
    throw std::invalid_argument("filter_rate: empty label array");
  }
  const auto zeros = static_cast<double>(
      std::count(labels.begin(), labels.end(), Label{0}));
  return zeros / static_cast<double>(labels.size());
}

bool same_cycle(std::span<const Point2D> a, std::span<const Point2D> b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t shift = 0; shift < b.size(); ++shift) {
    if (!(b[shift] == a[0])) continue;
    bool match = true;
    for (std::size_t i = 1; i < a.size() && match; ++i) {
      match = a[i] == b[(shift + i) % b.size()];
    }
    if (match) return true;
  }
  return false;
}

}  // namespace octohull
