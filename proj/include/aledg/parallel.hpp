#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace aledg {

/// Worker count, controlled by the ALEDG_NUM_THREADS environment variable.
/// Defaults to 1; results are identical for any setting because every loop
/// below writes disjoint slots.
inline int num_threads() {
  static const int n = [] {
    if (const char* env = std::getenv("ALEDG_NUM_THREADS")) {
      const int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 1;
  }();
  return n;
}

template <class Fn>
inline void parallel_for(int count, Fn&& fn) {
  const int workers = num_threads();
  if (workers <= 1 || count < 2 * workers) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr error;
  std::mutex error_mutex;
  const int chunk = (count + workers - 1) / workers;
  for (int t = 0; t < workers; ++t) {
    const int begin = t * chunk;
    const int end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([begin, end, &fn, &error, &error_mutex] {
      try {
        for (int i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (std::thread& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace aledg
