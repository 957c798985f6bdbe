#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qpn {

// Execution mode for grid evaluation.  Serial is the reference path; Par uses
// OpenMP when compiled in (identical results: every point is computed by a
// pure function and written to its own slot).
enum class Exec { Serial, Par };

#ifdef _OPENMP
inline constexpr bool openmp_enabled = true;
#else
inline constexpr bool openmp_enabled = false;
#endif

// Exceptions must not escape an OpenMP region: the first one is captured and
// rethrown after the loop completes.
template <class Body>
void parallel_for(std::size_t n, Exec mode, Body&& body) {
#ifdef _OPENMP
  if (mode == Exec::Par) {
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < nn; ++i) {
      if (failed.load(std::memory_order_relaxed)) continue;
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
    if (failed.load()) std::rethrow_exception(error);
    return;
  }
#else
  (void)mode;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace qpn
