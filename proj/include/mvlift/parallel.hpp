#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#include <omp.h>

namespace mvlift {

/// Selects the OpenMP kernel or the serial reference path of an operation.
enum class Execution { serial, parallel };

/// Thread budget: MVLIFT_THREADS when set and positive, otherwise the OpenMP default.
int thread_cap();

/// Runs body(i) for i in [0, n). Exceptions thrown by body are rethrown on the
/// calling thread after the loop (the first one captured wins).
template <typename Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
  if (exec == Execution::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(thread_cap())
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace mvlift
