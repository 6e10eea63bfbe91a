#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#include <omp.h>

namespace shallow {

// Thread budget for the data-parallel kernels. jobs == 1 selects the serial
// reference loop; results never depend on the value.
struct Execution {
  int jobs = 1;

  static Execution serial() { return {1}; }
};

// Runs body(i) for i in [0, count). With more than one job the iterations are
// distributed over an OpenMP team; the first exception thrown by any
// iteration is rethrown on the calling thread after the loop joins.
template <typename Body>
void parallel_for(std::size_t count, const Execution& exec, Body&& body) {
  if (exec.jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(exec.jobs)
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace shallow
