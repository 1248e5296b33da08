#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>

#include <cstring>
#include <stdexcept>

#include "octohull/filter.hpp"
#include "octohull/hull.hpp"
#include "octohull/pointgen.hpp"

namespace py = pybind11;
using namespace octohull;

namespace {

using DoubleArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

PointSet to_points(const DoubleArray& arr) {
  const py::buffer_info info = arr.request();
  if (info.ndim != 2 || info.shape[1] != 2) {
    throw std::invalid_argument("expected an array of shape (n, 2)");
  }
  const auto n = static_cast<std::size_t>(info.shape[0]);
  PointSet pts(n);
  std::memcpy(pts.data(), info.ptr, n * sizeof(Point2D));
  require_finite(pts);
  return pts;
}

py::array from_points(const std::vector<Point2D>& pts) {
  py::array_t<double> out({static_cast<py::ssize_t>(pts.size()),
                           static_cast<py::ssize_t>(2)});
  std::memcpy(out.request().ptr, pts.data(), pts.size() * sizeof(Point2D));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "2D convex hulls with octagon pre-filtering";

  m.def(
      "generate",
      [](const std::string& dist, std::size_t n, std::uint64_t seed,
         double distort) {
        GenSpec spec;
        spec.dist = parse_distribution(dist);
        spec.n = n;
        spec.seed = seed;
        spec.distort_pct = distort;
        PointSet pts;
        {
          py::gil_scoped_release release;
          pts = generate(spec);
        }
        return from_points(pts);
      },
      py::arg("dist"), py::arg("n"), py::arg("seed") = 0,
      py::arg("distort") = 0.0,
      "Seeded synthetic points: normal | square | disk | circle");

  m.def(
      "heaphull",
      [](const DoubleArray& arr, std::size_t threads, std::size_t chunk) {
        const PointSet pts = to_points(arr);
        HullPolygon hull;
        {
          py::gil_scoped_release release;
          ReduceEngine engine({chunk, threads});
          hull = heaphull(pts, engine);
        }
        return from_points(hull.vertices);
      },
      py::arg("points"), py::arg("threads") = 1, py::arg("chunk") = 32,
      "Octagon-filtered convex hull; returns the CCW vertex cycle");

  m.def(
      "monotone_chain",
      [](const DoubleArray& arr) {
        const PointSet pts = to_points(arr);
        HullPolygon hull;
        {
          py::gil_scoped_release release;
          hull = monotone_chain_hull(pts);
        }
        return from_points(hull.vertices);
      },
      py::arg("points"),
      "Full-set reference hull (Andrew's monotone chain)");

  m.def(
      "classify",
      [](const DoubleArray& arr, std::size_t threads, std::size_t chunk) {
        const PointSet pts = to_points(arr);
        LabelArray labels;
        {
          py::gil_scoped_release release;
          ReduceEngine engine({chunk, threads});
          const ExtremeSet ext = find_extremes(pts, engine);
          const Octagon oct = build_octagon(pts, ext);
          labels = classify_points(pts, oct, ext, engine);
        }
        py::array_t<std::uint8_t> out(static_cast<py::ssize_t>(labels.size()));
        std::memcpy(out.request().ptr, labels.data(), labels.size());
        return out;
      },
      py::arg("points"), py::arg("threads") = 1, py::arg("chunk") = 32,
      "Filter labels per point: 0 = discarded, 1..4 = quadrant queue");
}
