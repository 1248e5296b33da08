#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "octohull/bench.hpp"
#include "octohull/hull.hpp"
#include "octohull/io.hpp"
#include "octohull/pointgen.hpp"

namespace {

using namespace octohull;

std::size_t default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::string short_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, end);
}

struct CommonFlags {
  std::string format = "text";
  std::size_t threads = default_threads();
  std::size_t chunk = 32;
};

void add_engine_flags(CLI::App* cmd, CommonFlags& common) {
  cmd->add_option("--threads", common.threads, "Worker lanes")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--chunk", common.chunk, "Points per reduction chunk")
      ->check(CLI::PositiveNumber);
}

int cmd_generate(const std::string& dist, std::size_t n, std::uint64_t seed,
                 double distort, const std::string& format,
                 const std::string& out) {
  GenSpec spec;
  spec.dist = parse_distribution(dist);
  spec.n = n;
  spec.seed = seed;
  spec.distort_pct = distort;
  const PointSet pts = generate(spec);
  write_points(pts, out, parse_format(format));
  std::cout << "wrote " << pts.size() << " points to " << out << "\n";
  return 0;
}

int cmd_hull(const std::string& in, const CommonFlags& common,
             const std::string& algo, const std::string& out) {
  const PointSet pts = read_points(in, parse_format(common.format));

  HullPolygon hull;
  double rate = 0.0;
  if (algo == "heaphull") {
    ReduceEngine engine({common.chunk, common.threads});
    const HeaphullRun run = heaphull_run(pts, engine);
    hull = run.hull;
    rate = filter_rate(run.labels);
  } else if (algo == "oracle") {
    hull = monotone_chain_hull(pts);
  } else {
    throw std::runtime_error("unknown algorithm '" + algo +
                             "' (expected heaphull|oracle)");
  }
  write_points(hull.vertices, out, PointFormat::Text);
  std::cout << "h=" << hull.h() << " filter_rate=" << short_double(rate)
            << "\n";
  return 0;
}

int cmd_verify(const std::string& in, const CommonFlags& common) {
  const PointSet pts = read_points(in, parse_format(common.format));
  if (pts.size() > 1000000) {
    throw std::runtime_error(
        "verify is limited to 10^6 points (full reference hull cost)");
  }
  ReduceEngine engine({common.chunk, common.threads});
  const HullPolygon fast = heaphull(pts, engine);
  const HullPolygon ref = monotone_chain_hull(pts);

  if (fast.h() != ref.h()) {
    std::cerr << "MISMATCH: h=" << fast.h() << " but reference h=" << ref.h()
              << "\n";
    return 1;
  }
  // rotate the reference to the first computed vertex, then compare
  std::size_t shift = ref.h();
  for (std::size_t i = 0; i < ref.h(); ++i) {
    if (ref.vertices[i] == fast.vertices[0]) {
      shift = i;
      break;
    }
  }
  if (shift == ref.h()) {
    std::cerr << "MISMATCH at vertex 0: (" << fast.vertices[0].x << ", "
              << fast.vertices[0].y << ") not in reference hull\n";
    return 1;
  }
  for (std::size_t i = 0; i < fast.h(); ++i) {
    const Point2D& got = fast.vertices[i];
    const Point2D& want = ref.vertices[(shift + i) % ref.h()];
    if (!(got == want)) {
      std::cerr << "MISMATCH at vertex " << i << ": got (" << got.x << ", "
                << got.y << "), reference has (" << want.x << ", " << want.y
                << ")\n";
      return 1;
    }
  }
  std::cout << "OK h=" << fast.h() << "\n";
  return 0;
}

int cmd_bench(const std::string& dist, const std::vector<std::size_t>& ns,
              std::size_t reps, std::uint64_t seed, double distort,
              const CommonFlags& common, const std::string& report,
              const std::string& out) {
  const ReportFormat fmt = parse_report_format(report);
  std::vector<BenchReport> rows;
  rows.reserve(ns.size());
  for (std::size_t n : ns) {
    GenSpec spec;
    spec.dist = parse_distribution(dist);
    spec.n = n;
    spec.seed = seed;
    spec.distort_pct = distort;
    rows.push_back(run_bench(spec, reps, {common.chunk, common.threads}));
    std::cerr << "bench: n=" << n << " done\n";
  }
  const std::string text =
      fmt == ReportFormat::Json ? to_json(rows) : to_csv(rows);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw std::runtime_error(out + ": cannot open for writing");
    f << text;
    if (!f.flush()) throw std::runtime_error(out + ": write error");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "octohull: 2D convex hulls with octagon pre-filtering, plus point-set "
      "generation, verification and benchmarking"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a synthetic point set");
  std::string gen_dist;
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  double gen_distort = 0.0;
  std::string gen_format = "text";
  std::string gen_out;
  gen->add_option("--dist", gen_dist, "normal|square|disk|circle")
      ->required();
  gen->add_option("--n", gen_n, "Point count")->required();
  gen->add_option("--seed", gen_seed, "PRNG seed");
  gen->add_option("--distort", gen_distort,
                  "Radial displacement percentage (circle only)");
  gen->add_option("--format", gen_format, "text|binary");
  gen->add_option("--out", gen_out, "Output file")->required();

  // hull
  auto* hull = app.add_subcommand("hull", "Compute a convex hull");
  std::string hull_in, hull_algo = "heaphull", hull_out;
  CommonFlags hull_common;
  hull->add_option("--in", hull_in, "Input point file")->required();
  hull->add_option("--format", hull_common.format, "text|binary");
  hull->add_option("--algo", hull_algo, "heaphull|oracle");
  add_engine_flags(hull, hull_common);
  hull->add_option("--out", hull_out, "Hull output file (text, CCW)")
      ->required();

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Check the filtered hull against the full-set reference");
  std::string verify_in;
  CommonFlags verify_common;
  verify->add_option("--in", verify_in, "Input point file")->required();
  verify->add_option("--format", verify_common.format, "text|binary");
  add_engine_flags(verify, verify_common);

  // bench
  auto* bench = app.add_subcommand("bench", "Timed runs with a report");
  std::string bench_dist;
  std::vector<std::size_t> bench_ns;
  std::size_t bench_reps = 100;
  std::uint64_t bench_seed = 0;
  double bench_distort = 0.0;
  CommonFlags bench_common;
  std::string bench_report = "json";
  std::string bench_out;
  bench->add_option("--dist", bench_dist, "normal|square|disk|circle")
      ->required();
  bench->add_option("--n-list", bench_ns, "Comma-separated point counts")
      ->required()
      ->delimiter(',');
  bench->add_option("--reps", bench_reps, "Repetitions per size")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed, "PRNG seed");
  bench->add_option("--distort", bench_distort,
                    "Radial displacement percentage (circle only)");
  add_engine_flags(bench, bench_common);
  bench->add_option("--report", bench_report, "json|csv");
  bench->add_option("--out", bench_out, "Report file (stdout if omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      return cmd_generate(gen_dist, gen_n, gen_seed, gen_distort, gen_format,
                          gen_out);
    }
    if (hull->parsed()) {
      return cmd_hull(hull_in, hull_common, hull_algo, hull_out);
    }
    if (verify->parsed()) {
      return cmd_verify(verify_in, verify_common);
    }
    if (bench->parsed()) {
      return cmd_bench(bench_dist, bench_ns, bench_reps, bench_seed,
                       bench_distort, bench_common, bench_report, bench_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
