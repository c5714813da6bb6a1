#pragma once

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace closurelab {

/// CLOSURELAB_JOBS if set and positive, else the hardware thread count.
inline std::size_t defaultJobs() {
  if (const char* env = std::getenv("CLOSURELAB_JOBS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  const auto hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// out[i] = fn(i) for i < count, on up to `jobs` threads. Results land in
/// index order whatever the schedule. The first exception (lowest index) is
/// rethrown after all workers stop.
template <class T, class Fn>
std::vector<T> parallelMap(std::size_t count, std::size_t jobs, Fn fn) {
  std::vector<T> out(count);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> nextIndex{0};
  std::mutex errorMutex;
  std::exception_ptr error;
  std::size_t errorIndex = count;
  auto worker = [&] {
    for (std::size_t i; (i = nextIndex.fetch_add(1)) < count;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(errorMutex);
        if (i < errorIndex) {
          errorIndex = i;
          error = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < std::min(jobs, count); ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace closurelab
