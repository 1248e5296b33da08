// Acceptance suite: end-to-end checks of the filtered-hull pipeline, its
// filter-rate envelope, determinism, scaling sanity and the CLI surface.
// Prints one PASS/FAIL line per criterion and exits nonzero on failure.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "octohull/bench.hpp"
#include "octohull/hull.hpp"
#include "octohull/io.hpp"
#include "octohull/pointgen.hpp"
#include "test_support.hpp"

using namespace octohull;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void fail(const std::string& note) {
    pass = false;
    if (notes.size() < 8) notes.push_back(note);
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Corpus {
  Distribution dist;
  double distort;
  std::size_t n;
  std::uint64_t seed;

  std::string describe() const {
    std::ostringstream os;
    os << to_string(dist);
    if (distort != 0.0) os << "+" << distort << "%";
    os << " n=" << n << " seed=" << seed;
    return os.str();
  }
};

LabelArray labels_only(const PointSet& pts, ReduceEngine& engine) {
  const ExtremeSet ext = find_extremes(pts, engine);
  const Octagon oct = build_octagon(pts, ext);
  return classify_points(pts, oct, ext, engine);
}

int run_command(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return -2;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// ---- criteria 1 and 7: reference equivalence and filter soundness ------

void check_equivalence_and_soundness(Outcome& equivalence,
                                     Outcome& soundness,
                                     std::size_t& corpora_run) {
  const std::vector<std::pair<Distribution, double>> dists = {
      {Distribution::Normal, 0.0},
      {Distribution::Square, 0.0},
      {Distribution::Disk, 0.0},
      {Distribution::Circle, 0.0},
      {Distribution::Circle, 2.0},
  };
  const std::vector<std::size_t> sizes = {1, 2, 3, 10, 1000, 100000};

  ReduceEngine engine({32, 2});
  for (const auto& [dist, distort] : dists) {
    for (const std::size_t n : sizes) {
      for (std::uint64_t s = 0; s < 20; ++s) {
        const Corpus corpus{dist, distort, n, 1000 + s};
        const PointSet pts =
            generate({dist, n, corpus.seed, distort});
        const HeaphullRun run = heaphull_run(pts, engine);
        const HullPolygon ref = monotone_chain_hull(pts);
        ++corpora_run;

        if (!same_cycle(run.hull.vertices, ref.vertices)) {
          equivalence.fail(corpus.describe() + ": cycle mismatch (h=" +
                           std::to_string(run.hull.h()) + " vs " +
                           std::to_string(ref.h()) + ")");
          continue;
        }

        // soundness: no discarded point is a reference vertex
        const std::size_t zeros = static_cast<std::size_t>(
            std::count(run.labels.begin(), run.labels.end(), Label{0}));
        if (zeros > 0) {
          std::set<std::pair<double, double>> vertex_coords;
          for (const Point2D& v : ref.vertices) {
            vertex_coords.insert({v.x, v.y});
          }
          for (std::size_t j = 0; j < pts.size(); ++j) {
            if (run.labels[j] == 0 &&
                vertex_coords.count({pts[j].x, pts[j].y}) > 0) {
              soundness.fail(corpus.describe() + ": discarded point " +
                             std::to_string(j) + " is a hull vertex");
              break;
            }
          }
        }
        // octagon vertices are input points, never outside the reference
        if (ref.h() >= 3) {
          const Octagon oct = build_octagon(pts, find_extremes(pts, engine));
          for (const Point2D& v : oct.vertices) {
            if (point_in_convex_polygon(v, ref.vertices) ==
                PolygonLocation::Outside) {
              soundness.fail(corpus.describe() + ": octagon vertex outside");
              break;
            }
          }
        }
      }
    }
  }
}

// ---- criterion 2: brute-force anchoring of the reference hull ----------

Outcome check_brute_force_anchor() {
  Outcome out;
  SplitMix64 rng(77);
  for (int set_idx = 0; set_idx < 200; ++set_idx) {
    const std::size_t n = 1 + (static_cast<std::size_t>(set_idx) * 7919) % 200;
    const auto seed = static_cast<std::uint64_t>(9000 + set_idx);
    PointSet pts;
    switch (set_idx % 4) {
      case 0:  // coarse grid: duplicates and collinear runs
        pts = octotest::random_grid_points(rng, n, 4);
        break;
      case 1:
        pts = generate({Distribution::Square, n, seed, 0.0});
        break;
      case 2:
        pts = generate({Distribution::Disk, n, seed, 0.0});
        break;
      default:
        pts = generate({Distribution::Normal, n, seed, 0.0});
        break;
    }
    const auto brute = octotest::brute_force_hull(pts);
    const HullPolygon ref = monotone_chain_hull(pts);
    if (!same_cycle(ref.vertices, brute)) {
      out.fail("set " + std::to_string(set_idx) + " (n=" + std::to_string(n) +
               "): reference hull disagrees with brute force");
    }
  }
  return out;
}

// ---- criteria 3-5: filter-rate envelopes --------------------------------

Outcome check_normal_filter_rate() {
  Outcome out;
  ReduceEngine engine({32, 2});
  for (const auto& [n, floor] :
       std::vector<std::pair<std::size_t, double>>{{1000000, 0.999},
                                                   {10000, 0.995}}) {
    double mean = 0.0;
    for (std::uint64_t s = 0; s < 10; ++s) {
      const PointSet pts = generate({Distribution::Normal, n, 40 + s, 0.0});
      mean += filter_rate(labels_only(pts, engine));
    }
    mean /= 10.0;
    std::ostringstream os;
    os << "n=" << n << " mean=" << mean << " (needs >= " << floor << ")";
    out.notes.push_back(os.str());
    if (mean < floor) out.pass = false;
  }
  return out;
}

Outcome check_circle_worst_case() {
  Outcome out;
  ReduceEngine engine({32, 2});
  const PointSet pts = generate({Distribution::Circle, 100000, 4242, 0.0});
  std::set<std::pair<double, double>> distinct;
  for (const Point2D& p : pts) distinct.insert({p.x, p.y});

  const HeaphullRun run = heaphull_run(pts, engine);
  const double rate = filter_rate(run.labels);
  std::ostringstream os;
  os << "rate=" << rate << " h=" << run.hull.h() << " distinct="
     << distinct.size();
  out.notes.push_back(os.str());
  if (rate > 0.01) out.fail("rate above 0.01");
  if (run.hull.h() != distinct.size()) out.fail("h != distinct point count");
  return out;
}

Outcome check_distorted_circle_rate() {
  Outcome out;
  ReduceEngine engine({32, 2});
  double mean = 0.0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    const PointSet pts = generate({Distribution::Circle, 1000000, 60 + s, 2.0});
    mean += filter_rate(labels_only(pts, engine));
  }
  mean /= 10.0;
  std::ostringstream os;
  os << "mean=" << mean << " (needs 0.05..0.20)";
  out.notes.push_back(os.str());
  if (mean < 0.05 || mean > 0.20) out.pass = false;
  return out;
}

// ---- criterion 6: determinism across engine configurations -------------

Outcome check_determinism() {
  Outcome out;
  const std::vector<Corpus> corpora = {
      {Distribution::Normal, 0.0, 20000, 1},
      {Distribution::Normal, 0.0, 999, 2},
      {Distribution::Square, 0.0, 20000, 3},
      {Distribution::Square, 0.0, 5000, 4},
      {Distribution::Disk, 0.0, 20000, 5},
      {Distribution::Disk, 0.0, 333, 6},
      {Distribution::Circle, 0.0, 10000, 7},
      {Distribution::Circle, 2.0, 20000, 8},
      {Distribution::Circle, 2.0, 5000, 9},
      {Distribution::Normal, 0.0, 64, 10},
  };
  for (const Corpus& corpus : corpora) {
    const PointSet pts =
        generate({corpus.dist, corpus.n, corpus.seed, corpus.distort});
    LabelArray ref_labels;
    std::vector<Point2D> ref_hull;
    bool first = true;
    for (const std::size_t chunk : {1, 32, 1024}) {
      for (const std::size_t workers : {1, 4, 8}) {
        ReduceEngine engine({chunk, workers});
        const HeaphullRun run = heaphull_run(pts, engine);
        if (first) {
          ref_labels = run.labels;
          ref_hull = run.hull.vertices;
          first = false;
          continue;
        }
        if (run.labels != ref_labels || !(run.hull.vertices == ref_hull)) {
          out.fail(corpus.describe() + ": differs at chunk=" +
                   std::to_string(chunk) +
                   " workers=" + std::to_string(workers));
        }
      }
    }
  }
  return out;
}

// ---- criterion 8: parallel scaling sanity -------------------------------

Outcome check_parallel_scaling() {
  Outcome out;
  const PointSet pts = generate({Distribution::Normal, 10000000, 321, 0.0});

  auto filter_wall_ms = [&](std::size_t workers) {
    double best = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
      ReduceEngine engine({32, workers});
      const auto t0 = Clock::now();
      const LabelArray labels = labels_only(pts, engine);
      const double ms = seconds_since(t0) * 1000.0;
      best = std::min(best, ms);
      if (labels.size() != pts.size()) out.fail("bad label array size");
    }
    return best;
  };

  const double t1 = filter_wall_ms(1);
  const double t4 = filter_wall_ms(4);
  const unsigned cores = std::thread::hardware_concurrency();

  std::ostringstream os;
  os << "n=1e7 filter wall time: 1 worker " << t1 << " ms, 4 workers " << t4
     << " ms (" << cores << " hardware threads)";
  out.notes.push_back(os.str());

  if (cores >= 4) {
    if (!(t4 < t1)) out.fail("4 workers not faster than 1 on >= 4 cores");
  } else {
    out.notes.push_back(
        "fewer than 4 cores: timings reported, ordering not enforced");
  }
  return out;
}

// ---- criterion 9: CLI round trip ----------------------------------------

Outcome check_cli_round_trip(const std::string& cli, const fs::path& scratch) {
  Outcome out;
  if (cli.empty()) {
    out.fail("no CLI path given");
    return out;
  }
  fs::create_directories(scratch);
  const std::string log = " >> " + (scratch / "cli.log").string() + " 2>&1";

  const std::vector<std::pair<std::string, double>> dists = {
      {"normal", 0.0}, {"square", 0.0}, {"disk", 0.0},
      {"circle", 0.0}, {"circle", 2.0},
  };
  int variant = 0;
  for (const auto& [dist, distort] : dists) {
    const fs::path pts_file =
        scratch / ("pts_" + dist + std::to_string(variant) + ".txt");
    const fs::path hull_file =
        scratch / ("hull_" + dist + std::to_string(variant) + ".txt");
    ++variant;

    std::ostringstream gen;
    gen << cli << " generate --dist " << dist << " --n 10000 --seed 9"
        << " --distort " << distort << " --out " << pts_file.string() << log;
    if (run_command(gen.str()) != 0) {
      out.fail(dist + ": generate failed");
      continue;
    }
    std::ostringstream hull;
    hull << cli << " hull --in " << pts_file.string()
         << " --algo heaphull --threads 2 --out " << hull_file.string() << log;
    if (run_command(hull.str()) != 0) {
      out.fail(dist + ": hull failed");
      continue;
    }
    const fs::path verify_out = scratch / "verify_out.txt";
    std::ostringstream verify;
    verify << cli << " verify --in " << pts_file.string() << " > "
           << verify_out.string() << " 2>&1";
    if (run_command(verify.str()) != 0) {
      out.fail(dist + ": verify failed");
      continue;
    }
    if (slurp(verify_out).rfind("OK h=", 0) != 0) {
      out.fail(dist + ": verify did not print OK");
    }
  }

  // binary write/read round trip is bit-exact
  const fs::path bin1 = scratch / "round1.bin";
  const fs::path bin2 = scratch / "round2.bin";
  std::ostringstream gen_bin;
  gen_bin << cli << " generate --dist disk --n 10000 --seed 10"
          << " --format binary --out " << bin1.string() << log;
  if (run_command(gen_bin.str()) != 0) {
    out.fail("binary generate failed");
  } else {
    write_points(read_points(bin1, PointFormat::Binary), bin2,
                 PointFormat::Binary);
    if (slurp(bin1) != slurp(bin2)) {
      out.fail("binary round trip is not bit-exact");
    }
  }

  // thread count changes timing only: hull files are byte-identical
  const fs::path pts_t = scratch / "pts_threads.txt";
  const fs::path hull_t1 = scratch / "hull_t1.txt";
  const fs::path hull_t8 = scratch / "hull_t8.txt";
  std::ostringstream gen_t;
  gen_t << cli << " generate --dist disk --n 20000 --seed 77 --out "
        << pts_t.string() << log;
  if (run_command(gen_t.str()) != 0) {
    out.fail("generate for the threads check failed");
  } else {
    for (const auto& [threads, file] :
         std::vector<std::pair<int, fs::path>>{{1, hull_t1}, {8, hull_t8}}) {
      std::ostringstream h;
      h << cli << " hull --in " << pts_t.string() << " --threads " << threads
        << " --out " << file.string() << log;
      if (run_command(h.str()) != 0) out.fail("hull for threads check failed");
    }
    if (slurp(hull_t1) != slurp(hull_t8)) {
      out.fail("hull files differ between --threads 1 and --threads 8");
    }
  }

  // bench emits a parseable report
  const fs::path report = scratch / "bench.json";
  std::ostringstream bench;
  bench << cli << " bench --dist normal --n-list 1000,2000 --reps 2 --seed 3"
        << " --report json --out " << report.string() << log;
  if (run_command(bench.str()) != 0) {
    out.fail("bench failed");
  } else {
    try {
      const auto rows = nlohmann::json::parse(slurp(report));
      if (rows.size() != 2 || rows[0]["n"] != 1000 ||
          rows[0]["filter_rate"] < 0.0 || rows[0]["filter_rate"] > 1.0) {
        out.fail("bench report content unexpected");
      }
    } catch (const std::exception& e) {
      out.fail(std::string("bench report unparseable: ") + e.what());
    }
  }

  // missing required flag exits nonzero
  if (run_command(cli + " hull --algo heaphull" + log) == 0) {
    out.fail("hull without --in should exit nonzero");
  }
  return out;
}

int report(int index, const std::string& title, const Outcome& out,
           double elapsed_s) {
  std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << index << ". " << title
            << " (" << elapsed_s << "s)\n";
  for (const std::string& note : out.notes) {
    std::cout << "       - " << note << "\n";
  }
  return out.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const fs::path scratch =
      argc > 2 ? fs::path(argv[2])
               : fs::temp_directory_path() / "octohull_acceptance";

  int failures = 0;

  {
    Outcome equivalence, soundness;
    std::size_t corpora = 0;
    const auto t0 = Clock::now();
    check_equivalence_and_soundness(equivalence, soundness, corpora);
    const double elapsed = seconds_since(t0);
    if (elapsed >= 120.0) {
      equivalence.fail("runtime budget exceeded: " + std::to_string(elapsed) +
                       "s (budget 120s)");
    }
    equivalence.notes.insert(equivalence.notes.begin(),
                             std::to_string(corpora) + " corpora");
    failures += report(1,
                       "filtered hull equals the reference hull on every "
                       "generated corpus",
                       equivalence, elapsed);

    const auto t7 = Clock::now();
    failures += report(7,
                       "filter soundness: discarded points are never hull "
                       "vertices, octagon stays inside",
                       soundness, seconds_since(t7));
  }
  {
    const auto t0 = Clock::now();
    const Outcome out = check_brute_force_anchor();
    failures += report(
        2, "reference hull equals the cubic brute force on 200 small sets",
        out, seconds_since(t0));
  }
  {
    const auto t0 = Clock::now();
    const Outcome out = check_normal_filter_rate();
    failures += report(3, "normal clouds: mean filter rate over 10 seeds",
                       out, seconds_since(t0));
  }
  {
    const auto t0 = Clock::now();
    const Outcome out = check_circle_worst_case();
    failures += report(
        4, "undistorted circle: filter rate <= 0.01 and every point kept",
        out, seconds_since(t0));
  }
  {
    const auto t0 = Clock::now();
    const Outcome out = check_distorted_circle_rate();
    failures += report(5, "2%-distorted circle: mean filter rate in band",
                       out, seconds_since(t0));
  }
  {
    const auto t0 = Clock::now();
    const Outcome out = check_determinism();
    failures += report(6,
                       "labels and hulls are byte-identical across chunk "
                       "sizes and worker counts",
                       out, seconds_since(t0));
  }
  {
    const auto t0 = Clock::now();
    const Outcome out = check_parallel_scaling();
    failures += report(8, "filtering scales with workers on n = 1e7",
                       out, seconds_since(t0));
  }
  {
    const auto t0 = Clock::now();
    const Outcome out = check_cli_round_trip(cli, scratch);
    failures += report(9, "CLI generate -> hull -> verify round trip",
                       out, seconds_since(t0));
  }

  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
