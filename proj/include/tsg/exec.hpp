#pragma once

#include <cstddef>
#include <exception>
#include <type_traits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tsg {

/// Execution policy for the brute-force kernels. `serial` is the reference
/// implementation; `parallel` distributes independent candidates over
/// OpenMP threads and must produce identical, identically ordered output.
enum class Exec { serial, parallel };

namespace kernels {

namespace detail {

// Runs body(i) for i in [0, count). Exceptions thrown by body are captured
// and the first one (lowest index) rethrown after the loop.
template <class Body> void for_each_index(std::size_t count, Body &&body, Exec exec) {
  if (exec == Exec::serial || count < 2) {
    for (std::size_t i = 0; i < count; ++i)
      body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);
}

} // namespace detail

/// Indices i in [0, count) with pred(i), ascending.
template <class Pred>
std::vector<std::size_t> select_indices(std::size_t count, Pred &&pred, Exec exec) {
  std::vector<char> keep(count, 0);
  detail::for_each_index(
      count, [&](std::size_t i) { keep[i] = pred(i) ? 1 : 0; }, exec);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < count; ++i)
    if (keep[i])
      out.push_back(i);
  return out;
}

/// [f(0), f(1), ..., f(count-1)].
template <class F> auto map_indices(std::size_t count, F &&f, Exec exec) {
  using R = std::decay_t<decltype(f(std::size_t{}))>;
  std::vector<R> out(count);
  detail::for_each_index(
      count, [&](std::size_t i) { out[i] = f(i); }, exec);
  return out;
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

} // namespace kernels
} // namespace tsg
