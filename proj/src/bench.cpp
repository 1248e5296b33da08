#include "octohull/bench.hpp"

#include <charconv>
#include <stdexcept>

#include "json.hpp"
#include "octohull/hull.hpp"

namespace octohull {
namespace {

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, end);
}

}  // namespace

ReportFormat parse_report_format(const std::string& token) {
  if (token == "json") return ReportFormat::Json;
  if (token == "csv") return ReportFormat::Csv;
  throw std::invalid_argument("unknown report format '" + token +
                              "' (expected json|csv)");
}

BenchReport run_bench(const GenSpec& spec, std::size_t reps,
                      ReduceConfig cfg) {
  if (reps < 1) throw std::invalid_argument("run_bench: reps must be >= 1");

  const PointSet pts = generate(spec);
  ReduceEngine engine(cfg);

  BenchReport row;
  row.n = spec.n;
  row.distribution = to_string(spec.dist);
  row.reps = reps;
  row.threads = cfg.workers;
  row.chunk = cfg.chunk_size;

  for (std::size_t r = 0; r < reps; ++r) {
    const HeaphullRun run = heaphull_run(pts, engine);
    row.filter_ms += run.filter_ms;
    row.hull_ms += run.hull_ms;
    row.total_ms += run.total_ms;
    if (r == 0) {
      row.filter_rate = filter_rate(run.labels);
      row.hull_size = run.hull.h();
    }
  }
  const auto d = static_cast<double>(reps);
  row.filter_ms /= d;
  row.hull_ms /= d;
  row.total_ms /= d;
  return row;
}

std::string to_json(std::span<const BenchReport> rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const BenchReport& r : rows) {
    arr.push_back({
        {"n", r.n},
        {"distribution", r.distribution},
        {"reps", r.reps},
        {"filter_ms", r.filter_ms},
        {"hull_ms", r.hull_ms},
        {"total_ms", r.total_ms},
        {"filter_rate", r.filter_rate},
        {"hull_size", r.hull_size},
        {"threads", r.threads},
        {"chunk", r.chunk},
    });
  }
  return arr.dump(2) + "\n";
}

std::string to_csv(std::span<const BenchReport> rows) {
  std::string out =
      "n,distribution,reps,filter_ms,hull_ms,total_ms,filter_rate,"
      "hull_size,threads,chunk\n";
  for (const BenchReport& r : rows) {
    out += std::to_string(r.n) + ',' + r.distribution + ',' +
           std::to_string(r.reps) + ',' + format_double(r.filter_ms) + ',' +
           format_double(r.hull_ms) + ',' + format_double(r.total_ms) + ',' +
           format_double(r.filter_rate) + ',' + std::to_string(r.hull_size) +
           ',' + std::to_string(r.threads) + ',' + std::to_string(r.chunk) +
           '\n';
  }
  return out;
}

}  // namespace octohull
