#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gammabnd {

// Worker cap: GAMMABND_THREADS (integer >= 1) when set, else the hardware
// concurrency.
inline unsigned thread_cap() {
  if (const char* env = std::getenv("GAMMABND_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && n >= 1) return static_cast<unsigned>(n > 256 ? 256 : n);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

// Runs body(i) for i in [0, count).  Callers write results into index-addressed
// slots, so output ordering never depends on scheduling.  The first exception
// is rethrown after all workers join.
template <class F>
void parallel_for(std::size_t count, F&& body) {
  const std::size_t cap = thread_cap();
  const std::size_t workers = count < cap ? count : cap;
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr first_error;
  auto drain = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 0; t + 1 < workers; ++t) pool.emplace_back(drain);
  drain();
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace gammabnd
