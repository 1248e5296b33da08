#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "octohull/geometry.hpp"

namespace octohull {

enum class PointFormat { Text, Binary };

std::string to_string(PointFormat format);
PointFormat parse_format(const std::string& token);

/// Reads a point set.
///
/// Text: one "x y" pair per line, whitespace-separated; blank lines and
/// lines starting with '#' are ignored. Binary: magic "PTS2", an unsigned
/// 64-bit little-endian count, then count (x, y) pairs of little-endian
/// IEEE-754 doubles, independent of host byte order.
///
/// Malformed lines, truncated payloads, non-finite values and empty sets
/// are rejected with the offending line or byte position.
PointSet read_points(const std::filesystem::path& path, PointFormat format);

/// Inverse of read_points. Text uses shortest round-trip formatting;
/// binary round trips bit-exactly. I/O failures name the path.
void write_points(std::span<const Point2D> pts,
                  const std::filesystem::path& path, PointFormat format);

}  // namespace octohull
