#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fundsol {

inline unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Runs body(i) for i in [0, n) on a bounded pool. Callers write results by
/// index, so output order never depends on scheduling. The first exception
/// thrown by any task is rethrown after all workers stop.
template <class Body>
void parallel_for(std::size_t n, Body&& body, unsigned workers = 0) {
  if (workers == 0) workers = default_workers();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first;
  std::mutex guard;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          if (failed.load()) return;
          std::size_t i = next.fetch_add(1);
          if (i >= n) return;
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(guard);
            if (!first) first = std::current_exception();
            failed = true;
          }
        }
      });
    }
  }
  if (first) std::rethrow_exception(first);
}

}  // namespace fundsol
