#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#include "zetakit/numeric.hpp"

namespace zetakit {

/// out[i] = fn(i) for i in [0, n), evaluated on `threads` workers (0 = default).
///
/// Each slot is written by exactly one iteration, so the result does not
/// depend on the thread count. The first exception thrown by `fn` is
/// rethrown on the calling thread.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, int threads, Fn&& fn) {
  std::vector<T> out(n);
  if (threads <= 0) threads = default_thread_count();
  std::exception_ptr failure;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(static) num_threads(threads)
  for (long long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(zetakit_parallel_map_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace zetakit
