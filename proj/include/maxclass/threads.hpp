#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace maxclass {

// Applies MAXCLASS_THREADS (0 or unset = OpenMP default). Returns the
// thread count in effect.
int configure_threads();

// out[i] = fn(i) for i in [0, n), evaluated in parallel; results keep index
// order. The exception of the lowest failing index is rethrown.
template <class T, class Fn>
std::vector<T> parallel_indexed(std::size_t n, Fn&& fn) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      out[idx] = fn(idx);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace maxclass
