#pragma once

#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bsmc {

// Execution policy for the data-parallel kernels. Every kernel pairs a
// deterministic RNG stream with each loop index, so Serial and Parallel
// produce bit-identical results; Serial is the reference the tests compare
// against.
enum class Exec { Serial, Parallel };

// BSMC_THREADS=1 forces serial execution everywhere; BSMC_THREADS=k caps the
// OpenMP team size. Returns 0 when unset.
inline int thread_override() {
  const char* s = std::getenv("BSMC_THREADS");
  if (!s) return 0;
  return std::atoi(s);
}

inline Exec default_exec() {
#ifdef _OPENMP
  return thread_override() == 1 ? Exec::Serial : Exec::Parallel;
#else
  return Exec::Serial;
#endif
}

// Called once by the CLI and the benchmark driver.
inline void configure_threads_from_env() {
#ifdef _OPENMP
  const int n = thread_override();
  if (n > 0) omp_set_num_threads(n);
#endif
}

// Runs body(i) for i in [0, n). The first exception thrown by any iteration
// is rethrown on the calling thread.
template <typename F>
void parallel_for(std::size_t n, F&& body, Exec exec = default_exec()) {
#ifdef _OPENMP
  if (exec == Exec::Parallel && n > 1) {
    std::exception_ptr err;
    std::mutex err_mutex;
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return;
  }
#endif
  (void)exec;
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace bsmc
