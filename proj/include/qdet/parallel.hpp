#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace qdet {

inline int default_thread_count() {
  if (const char* env = std::getenv("QDET_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Deterministic parallel map: results are collected by index, so the output
// is identical to the sequential run regardless of scheduling.
template <class R, class F>
std::vector<R> parallel_map(size_t count, int threads, F fn) {
  std::vector<R> out(count);
  if (threads <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  int nthreads = std::min<int>(threads, static_cast<int>(count));
  pool.reserve(static_cast<size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace qdet
