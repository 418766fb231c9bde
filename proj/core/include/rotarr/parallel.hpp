#pragma once

// Index-parallel loops. Results are written by index, so output never depends
// on the number of worker threads.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rotarr {

// Process-wide default for parallel_for; 1 means run inline.
void set_default_jobs(unsigned jobs);
unsigned default_jobs();

namespace detail {
// Set inside workers so that nested loops run inline instead of oversubscribing.
inline thread_local bool in_parallel_region = false;
}  // namespace detail

template <class F>
void parallel_for(std::size_t n, F&& body, unsigned jobs = default_jobs()) {
  if (jobs <= 1 || n < 2 || detail::in_parallel_region) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(jobs, n);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::size_t error_index = n;
  std::exception_ptr error;
  auto run = [&] {
    const bool outer = detail::in_parallel_region;
    detail::in_parallel_region = true;
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) break;
      try {
        body(i);
      } catch (...) {
        // Keep the failure with the smallest index so errors are reproducible.
        std::lock_guard lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
    detail::in_parallel_region = outer;
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace rotarr
