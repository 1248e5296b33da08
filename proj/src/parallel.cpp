#include "octohull/parallel.hpp"

#include <algorithm>

namespace octohull {

ReduceEngine::ReduceEngine(ReduceConfig cfg) : cfg_(cfg) {
  if (cfg_.chunk_size < 1) {
    throw std::invalid_argument("ReduceConfig.chunk_size must be >= 1");
  }
  if (cfg_.workers < 1) {
    throw std::invalid_argument("ReduceConfig.workers must be >= 1");
  }
  threads_.reserve(cfg_.workers - 1);
  for (std::size_t i = 0; i + 1 < cfg_.workers; ++i) {
    threads_.emplace_back([this] { worker_loop(); });
  }
}

ReduceEngine::~ReduceEngine() {
  {
    std::lock_guard<std::mutex> lock(mu_);
    stop_ = true;
  }
  cv_work_.notify_all();
  for (auto& t : threads_) t.join();
}

std::size_t ReduceEngine::argmin(std::span<const double> keys) {
  return argmin_by(keys.size(), [keys](std::size_t i) { return keys[i]; });
}

std::size_t ReduceEngine::argmax(std::span<const double> keys) {
  return argmax_by(keys.size(), [keys](std::size_t i) { return keys[i]; });
}

std::size_t ReduceEngine::lane_count(std::size_t n) const {
  const std::size_t chunks = (n + cfg_.chunk_size - 1) / cfg_.chunk_size;
  return std::max<std::size_t>(1, std::min(cfg_.workers, chunks));
}

void ReduceEngine::run_lanes(
    std::size_t n, const std::function<void(std::size_t, std::size_t,
                                            std::size_t)>& task) {
  const std::size_t lanes = lane_count(n);
  const std::size_t chunks = (n + cfg_.chunk_size - 1) / cfg_.chunk_size;
  const std::size_t per_lane = chunks / lanes;
  const std::size_t extra = chunks % lanes;

  auto lane_range = [&](std::size_t lane, std::size_t& begin,
                        std::size_t& end) {
    const std::size_t first_chunk =
        lane * per_lane + std::min(lane, extra);
    const std::size_t chunk_count = per_lane + (lane < extra ? 1 : 0);
    begin = first_chunk * cfg_.chunk_size;
    end = std::min((first_chunk + chunk_count) * cfg_.chunk_size, n);
  };

  if (lanes == 1) {
    task(0, 0, n);
    return;
  }

  std::function<void(std::size_t)> job = [&](std::size_t lane) {
    std::size_t begin = 0, end = 0;
    lane_range(lane, begin, end);
    task(lane, begin, end);
  };

  {
    std::lock_guard<std::mutex> lock(mu_);
    job_ = &job;
    job_lanes_ = lanes;
    next_lane_ = 1;  // lane 0 runs on the calling thread
    ++generation_;
  }
  cv_work_.notify_all();

  job(0);

  std::unique_lock<std::mutex> lock(mu_);
  cv_done_.wait(lock,
                [this] { return next_lane_ >= job_lanes_ && running_ == 0; });
  job_ = nullptr;
}

void ReduceEngine::worker_loop() {
  std::unique_lock<std::mutex> lock(mu_);
  for (;;) {
    cv_work_.wait(lock, [this] {
      return stop_ || (job_ != nullptr && next_lane_ < job_lanes_);
    });
    if (stop_) return;
    const std::size_t lane = next_lane_++;
    ++running_;
    const auto* job = job_;
    lock.unlock();
    (*job)(lane);
    lock.lock();
    --running_;
    if (next_lane_ >= job_lanes_ && running_ == 0) cv_done_.notify_one();
  }
}

}  // namespace octohull
