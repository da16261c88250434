#pragma once

#include <cstddef>
#include <functional>

namespace stable_core {

/// Number of threads the library may use: hardware concurrency, capped by the
/// STABLE_CORE_THREADS environment variable when it holds a positive integer.
std::size_t thread_budget();

/// Calls body(i) for every i in [0, count), spread over thread_budget()
/// threads. Iterations must be independent. The first exception thrown by
/// any iteration is rethrown after all threads have stopped.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// Same with an explicit thread count.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace stable_core
