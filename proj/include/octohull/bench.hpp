#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "octohull/parallel.hpp"
#include "octohull/pointgen.hpp"

namespace octohull {

/// One benchmark row. Times are wall-clock means over the repetitions;
/// the filter time covers extremes, octagon and label materialization,
/// the hull time everything after (queues, chains, assembly).
/// Field order here is the serialization order.
struct BenchReport {
  std::size_t n = 0;
  std::string distribution;
  std::size_t reps = 0;
  double filter_ms = 0.0;
  double hull_ms = 0.0;
  double total_ms = 0.0;
  double filter_rate = 0.0;
  std::size_t hull_size = 0;
  std::size_t threads = 0;
  std::size_t chunk = 0;
};

enum class ReportFormat { Json, Csv };

ReportFormat parse_report_format(const std::string& token);

/// Generates the spec once, runs the filtered hull `reps` times and
/// averages the stage timings. filter_rate and hull_size are identical
/// across repetitions (the pipeline is deterministic).
BenchReport run_bench(const GenSpec& spec, std::size_t reps,
                      ReduceConfig cfg);

/// JSON array of objects carrying exactly the BenchReport fields, in
/// declaration order.
std::string to_json(std::span<const BenchReport> rows);

/// CSV with a header row of the same names in the same order.
std::string to_csv(std::span<const BenchReport> rows);

}  // namespace octohull
