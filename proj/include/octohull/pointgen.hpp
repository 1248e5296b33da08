#pragma once

#include <cstdint>
#include <string>

#include "octohull/geometry.hpp"

namespace octohull {

enum class Distribution { Normal, Square, Disk, Circle };

/// CLI token of a distribution ("normal", "square", "disk", "circle").
std::string to_string(Distribution dist);

/// Inverse of to_string; throws std::invalid_argument on unknown tokens.
Distribution parse_distribution(const std::string& token);

/// What to generate. distort_pct is a radial displacement percentage and
/// is only meaningful for the circle distribution; it must be 0 elsewhere.
struct GenSpec {
  Distribution dist = Distribution::Normal;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double distort_pct = 0.0;
};

/// splitmix64: a published 64-bit shift-multiply generator, fixed by its
/// constants so that independent implementations can reproduce the exact
/// same stream:
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
///
/// next_unit() maps the top 53 bits to a double in [0, 1).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

/// Deterministic synthetic point sets (same spec, same bytes):
///   normal  - both coordinates standard normal, via the Marsaglia polar
///             transform: draw v1, v2 in [-1, 1), s = v1^2 + v2^2, retry
///             unless 0 < s < 1, then scale by sqrt(-2 ln(s) / s)
///   square  - uniform in [0, 1)^2
///   disk    - uniform by area in the unit disk: r = sqrt(u), angle
///             uniform in [0, 2 pi)
///   circle  - angle uniform in [0, 2 pi), radius 1 + u * distort_pct/100
///             with u uniform in [-1, 1) (symmetric radial displacement)
///
/// Generation is single-threaded by contract. Throws on invalid specs
/// (n = 0, nonzero distortion outside circle, negative distortion).
PointSet generate(const GenSpec& spec);

}  // namespace octohull
