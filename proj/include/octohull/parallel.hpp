#pragma once

#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

namespace octohull {

/// Work geometry of the reduction engine. chunk_size is the number of
/// points processed as one unit (the analog of a thread block); workers
/// is the number of parallel lanes. Results never depend on either value.
struct ReduceConfig {
  std::size_t chunk_size = 32;
  std::size_t workers = 1;
};

/// Carries an argmin/argmax candidate through the reduction tree.
/// The order is total: first by key, ties broken by smaller index.
struct ArgReduceKey {
  double key = 0.0;
  std::size_t index = 0;

  friend bool operator==(const ArgReduceKey&, const ArgReduceKey&) = default;
};

/// Combine step for arg-minimum. Associative and commutative, which is
/// what makes the result independent of chunking and lane count.
inline ArgReduceKey combine_min(const ArgReduceKey& a, const ArgReduceKey& b) {
  if (b.key < a.key || (b.key == a.key && b.index < a.index)) return b;
  return a;
}

/// Combine step for arg-maximum (ties still go to the smaller index).
inline ArgReduceKey combine_max(const ArgReduceKey& a, const ArgReduceKey& b) {
  if (b.key > a.key || (b.key == a.key && b.index < a.index)) return b;
  return a;
}

/// Deterministic chunked data-parallel engine: arg-extreme reductions and
/// an elementwise map over an index range. Items are grouped into chunks
/// of cfg.chunk_size; contiguous runs of chunks are assigned to lanes and
/// the per-lane results are merged by the calling thread in lane order.
///
/// The engine owns its worker threads for its whole lifetime. Submitted
/// callables must be pure over read-only shared input. One call at a time
/// per instance; distinct instances may run concurrently.
class ReduceEngine {
 public:
  explicit ReduceEngine(ReduceConfig cfg = {});
  ~ReduceEngine();

  ReduceEngine(const ReduceEngine&) = delete;
  ReduceEngine& operator=(const ReduceEngine&) = delete;

  const ReduceConfig& config() const { return cfg_; }

  /// Index of the minimum key; among equal keys, the smallest index.
  /// Throws std::invalid_argument on empty input.
  std::size_t argmin(std::span<const double> keys);
  std::size_t argmax(std::span<const double> keys);

  /// Arg-reductions over a computed key, avoiding a materialized key array.
  template <typename KeyFn>
  std::size_t argmin_by(std::size_t n, KeyFn&& key) {
    return arg_reduce(n, key, /*want_max=*/false);
  }

  template <typename KeyFn>
  std::size_t argmax_by(std::size_t n, KeyFn&& key) {
    return arg_reduce(n, key, /*want_max=*/true);
  }

  /// out[i] = fn(i) for i in [0, n). Chunk/lane layout never changes the
  /// output.
  template <typename T, typename Fn>
  std::vector<T> map(std::size_t n, Fn&& fn) {
    std::vector<T> out(n);
    run_lanes(n, [&](std::size_t, std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) out[i] = fn(i);
    });
    return out;
  }

 private:
  template <typename KeyFn>
  std::size_t arg_reduce(std::size_t n, KeyFn& key, bool want_max) {
    if (n == 0) {
      throw std::invalid_argument("arg reduction over empty input");
    }
    const auto combine = want_max ? combine_max : combine_min;
    std::vector<ArgReduceKey> lane_best(lane_count(n));
    run_lanes(n, [&](std::size_t lane, std::size_t begin, std::size_t end) {
      ArgReduceKey best{key(begin), begin};
      // walk the lane's range one chunk at a time, merging chunk champions
      for (std::size_t cb = begin; cb < end; cb += cfg_.chunk_size) {
        const std::size_t ce = std::min(cb + cfg_.chunk_size, end);
        ArgReduceKey chunk_best{key(cb), cb};
        for (std::size_t i = cb + 1; i < ce; ++i) {
          chunk_best = combine(chunk_best, ArgReduceKey{key(i), i});
        }
        best = combine(best, chunk_best);
      }
      lane_best[lane] = best;
    });
    ArgReduceKey best = lane_best[0];
    for (std::size_t lane = 1; lane < lane_best.size(); ++lane) {
      best = combine(best, lane_best[lane]);
    }
    return best.index;
  }

  std::size_t lane_count(std::size_t n) const;

  /// Splits [0, n) into per-lane ranges aligned to chunk boundaries and
  /// invokes task(lane, begin, end) on every lane. Lane 0 runs on the
  /// calling thread; the call returns after all lanes finish.
  void run_lanes(std::size_t n,
                 const std::function<void(std::size_t lane, std::size_t begin,
                                          std::size_t end)>& task);

  void worker_loop();

  ReduceConfig cfg_;
  std::vector<std::thread> threads_;

  std::mutex mu_;
  std::condition_variable cv_work_;
  std::condition_variable cv_done_;
  const std::function<void(std::size_t)>* job_ = nullptr;  // fn(lane)
  std::size_t job_lanes_ = 0;
  std::size_t next_lane_ = 0;
  std::size_t running_ = 0;
  std::uint64_t generation_ = 0;
  bool stop_ = false;
};

/// output[j] = f(points[j]): the embarrassingly parallel per-point map.
template <typename T, typename In, typename Fn>
std::vector<T> parallel_map(std::span<const In> items, Fn&& f,
                            ReduceEngine& engine) {
  return engine.map<T>(items.size(),
                       [&](std::size_t i) { return f(items[i]); });
}

}  // namespace octohull
