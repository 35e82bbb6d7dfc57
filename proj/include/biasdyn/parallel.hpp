#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace biasdyn {

inline unsigned default_worker_count() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1u : hc;
}

/// Runs fn(i) for every i in [0, count) across `workers` threads (0 picks the
/// machine default). Callers must write results into pre-sized storage indexed
/// by i so the outcome is independent of scheduling. The first exception thrown
/// by any task is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  if (count == 0) return;
  if (workers == 0) workers = default_worker_count();
  if (workers <= 1 || count == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        fn(i);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  const std::size_t spawn =
      std::min<std::size_t>(workers, count) - 1;  // caller participates
  std::vector<std::thread> pool;
  pool.reserve(spawn);
  for (std::size_t i = 0; i < spawn; ++i) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace biasdyn
