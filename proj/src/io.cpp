#include "octohull/io.hpp"

#include <bit>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace octohull {
namespace {

constexpr char kMagic[4] = {'P', 'T', 'S', '2'};

[[noreturn]] void fail(const std::filesystem::path& path,
                       const std::string& what) {
  throw std::runtime_error(path.string() + ": " + what);
}

void store_u64_le(std::uint64_t v, char* out) {
  for (int i = 0; i < 8; ++i) out[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
}

std::uint64_t load_u64_le(const char* in) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[i]))
         << (8 * i);
  }
  return v;
}

void store_f64_le(double d, char* out) {
  store_u64_le(std::bit_cast<std::uint64_t>(d), out);
}

double load_f64_le(const char* in) {
  return std::bit_cast<double>(load_u64_le(in));
}

const char* skip_ws(const char* p, const char* end) {
  while (p != end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
  return p;
}

PointSet read_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open for reading");

  PointSet pts;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    p = skip_ws(p, end);
    if (p == end || *p == '#') continue;

    Point2D pt;
    for (double* coord : {&pt.x, &pt.y}) {
      p = skip_ws(p, end);
      const auto [next, ec] = std::from_chars(p, end, *coord);
      if (ec != std::errc{} || next == p) {
        fail(path, "line " + std::to_string(line_no) +
                       ": expected two numeric coordinates");
      }
      p = next;
    }
    if (skip_ws(p, end) != end) {
      fail(path, "line " + std::to_string(line_no) +
                     ": trailing characters after coordinates");
    }
    if (!std::isfinite(pt.x) || !std::isfinite(pt.y)) {
      fail(path, "line " + std::to_string(line_no) +
                     ": non-finite coordinate");
    }
    pts.push_back(pt);
  }
  if (in.bad()) fail(path, "read error");
  if (pts.empty()) fail(path, "no points (empty sets are rejected)");
  return pts;
}

PointSet read_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open for reading");

  char header[12];
  if (!in.read(header, sizeof(header))) {
    fail(path, "truncated header (need 12 bytes: magic + count)");
  }
  if (std::memcmp(header, kMagic, 4) != 0) {
    fail(path, "bad magic at byte 0 (expected \"PTS2\")");
  }
  const std::uint64_t count = load_u64_le(header + 4);
  if (count == 0) fail(path, "point count is 0 (empty sets are rejected)");

  const auto payload = std::filesystem::file_size(path);
  const std::uint64_t expected = 12 + 16 * count;
  if (payload != expected) {
    fail(path, "size mismatch: header announces " + std::to_string(count) +
                   " points (" + std::to_string(expected) + " bytes), file has " +
                   std::to_string(payload));
  }

  PointSet pts;
  pts.reserve(count);
  char rec[16];
  for (std::uint64_t i = 0; i < count; ++i) {
    if (!in.read(rec, sizeof(rec))) {
      fail(path, "truncated payload at byte " + std::to_string(12 + 16 * i));
    }
    const Point2D pt{load_f64_le(rec), load_f64_le(rec + 8)};
    if (!std::isfinite(pt.x) || !std::isfinite(pt.y)) {
      fail(path, "non-finite coordinate in point " + std::to_string(i) +
                     " at byte " + std::to_string(12 + 16 * i));
    }
    pts.push_back(pt);
  }
  return pts;
}

void write_text(std::span<const Point2D> pts,
                const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) fail(path, "cannot open for writing");

  char buf[64];
  for (const Point2D& pt : pts) {
    for (int c = 0; c < 2; ++c) {
      const double v = c == 0 ? pt.x : pt.y;
      const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
      if (ec != std::errc{}) fail(path, "number formatting failed");
      out.write(buf, end - buf);
      out.put(c == 0 ? ' ' : '\n');
    }
  }
  out.flush();
  if (!out) fail(path, "write error");
}

void write_binary(std::span<const Point2D> pts,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(path, "cannot open for writing");

  char header[12];
  std::memcpy(header, kMagic, 4);
  store_u64_le(pts.size(), header + 4);
  out.write(header, sizeof(header));

  char rec[16];
  for (const Point2D& pt : pts) {
    store_f64_le(pt.x, rec);
    store_f64_le(pt.y, rec + 8);
    out.write(rec, sizeof(rec));
  }
  out.flush();
  if (!out) fail(path, "write error");
}

}  // namespace

std::string to_string(PointFormat format) {
  return format == PointFormat::Text ? "text" : "binary";
}

PointFormat parse_format(const std::string& token) {
  if (token == "text") return PointFormat::Text;
  if (token == "binary") return PointFormat::Binary;
  throw std::invalid_argument("unknown format '" + token +
                              "' (expected text|binary)");
}

PointSet read_points(const std::filesystem::path& path, PointFormat format) {
  return format == PointFormat::Text ? read_text(path) : read_binary(path);
}

void write_points(std::span<const Point2D> pts,
                  const std::filesystem::path& path, PointFormat format) {
  if (format == PointFormat::Text) {
    write_text(pts, path);
  } else {
    write_binary(pts, path);
  }
}

}  // namespace octohull
