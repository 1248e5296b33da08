#include "octohull/pointgen.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace octohull {

std::string to_string(Distribution dist) {
  switch (dist) {
    case Distribution::Normal: return "normal";
    case Distribution::Square: return "square";
    case Distribution::Disk: return "disk";
    case Distribution::Circle: return "circle";
  }
  throw std::invalid_argument("unknown distribution value");
}

Distribution parse_distribution(const std::string& token) {
  if (token == "normal") return Distribution::Normal;
  if (token == "square") return Distribution::Square;
  if (token == "disk") return Distribution::Disk;
  if (token == "circle") return Distribution::Circle;
  throw std::invalid_argument("unknown distribution '" + token +
                              "' (expected normal|square|disk|circle)");
}

namespace {

Point2D next_normal_pair(SplitMix64& rng) {
  // Marsaglia polar method; the retry loop keeps the stream deterministic
  for (;;) {
    const double v1 = 2.0 * rng.next_unit() - 1.0;
    const double v2 = 2.0 * rng.next_unit() - 1.0;
    const double s = v1 * v1 + v2 * v2;
    if (s >= 1.0 || s == 0.0) continue;
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    return {v1 * f, v2 * f};
  }
}

}  // namespace

PointSet generate(const GenSpec& spec) {
  if (spec.n < 1) {
    throw std::invalid_argument("generate: n must be >= 1");
  }
  if (spec.distort_pct < 0.0) {
    throw std::invalid_argument("generate: distort_pct must be >= 0");
  }
  if (spec.dist != Distribution::Circle && spec.distort_pct != 0.0) {
    throw std::invalid_argument(
        "generate: distortion applies to the circle distribution only");
  }

  constexpr double two_pi = 2.0 * std::numbers::pi;
  SplitMix64 rng(spec.seed);
  PointSet pts;
  pts.reserve(spec.n);

  for (std::size_t i = 0; i < spec.n; ++i) {
    switch (spec.dist) {
      case Distribution::Normal:
        pts.push_back(next_normal_pair(rng));
        break;
      case Distribution::Square: {
        const double x = rng.next_unit();
        const double y = rng.next_unit();
        pts.push_back({x, y});
        break;
      }
      case Distribution::Disk: {
        const double r = std::sqrt(rng.next_unit());
        const double theta = two_pi * rng.next_unit();
        pts.push_back({r * std::cos(theta), r * std::sin(theta)});
        break;
      }
      case Distribution::Circle: {
        const double theta = two_pi * rng.next_unit();
        const double u = 2.0 * rng.next_unit() - 1.0;
        const double r = 1.0 + u * (spec.distort_pct / 100.0);
        pts.push_back({r * std::cos(theta), r * std::sin(theta)});
        break;
      }
    }
  }
  return pts;
}

}  // namespace octohull
