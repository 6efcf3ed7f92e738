#pragma once

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace btq {

// Runs body(i) for i in [0, n), split across the given number of threads.
// Bodies must write only to their own slots; the result is then independent
// of scheduling.
template <class F>
void parallel_for(long long n, int threads, F&& body) {
  if (threads <= 1 || n <= 1) {
    for (long long i = 0; i < n; ++i) body(i);
    return;
  }
  int workers = static_cast<int>(std::min<long long>(threads, n));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (long long i = w; i < n; i += workers) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace btq
