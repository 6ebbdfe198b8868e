#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <stop_token>
#include <thread>
#include <vector>

namespace wildnum {

// Worker count used when a caller passes 0.
inline std::size_t default_workers() {
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Calls body(i) for every i in [0, count), distributing chunks of indices
/// over `workers` threads. Chunks are claimed in increasing order, so when
/// `stop` fires every index below the lowest unclaimed chunk has either run
/// or was in flight. The first exception thrown by body is rethrown.
template <class Body>
void parallel_for(std::size_t count, std::size_t workers, std::size_t chunk, Body&& body,
                  std::stop_token stop = {}) {
  if (count == 0) return;
  if (workers == 0) workers = default_workers();
  chunk = std::max<std::size_t>(1, chunk);
  workers = std::min(workers, (count + chunk - 1) / chunk);

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::atomic<bool> failed{false};

  auto work = [&] {
    while (!stop.stop_requested() && !failed.load(std::memory_order_relaxed)) {
      std::size_t begin = next.fetch_add(chunk, std::memory_order_relaxed);
      if (begin >= count) return;
      std::size_t end = std::min(count, begin + chunk);
      try {
        for (std::size_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
        return;
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace wildnum
