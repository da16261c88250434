#include "stable_core/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace stable_core {

std::size_t thread_budget() {
  std::size_t budget = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("STABLE_CORE_THREADS")) {
    try {
      const long value = std::stol(cap);
      if (value > 0) budget = std::min(budget, static_cast<std::size_t>(value));
    } catch (const std::exception&) {
      // Unparseable values leave the default in place.
    }
  }
  return budget;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  parallel_for(count, thread_budget(), body);
}

void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body) {
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto run = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(threads - 1);
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(run);
  run();
  pool.clear();  // joins
  if (error) std::rethrow_exception(error);
}

}  // namespace stable_core
