#pragma once

#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bondsem {

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Applies fn to every index in [0, n) and returns results in index order.
/// threads <= 1 is the serial reference path; larger values fan out with
/// OpenMP. All library values are immutable, so fn only needs to be pure.
template <class F>
auto sweep_map(int n, F&& fn, int threads = 1) {
  using R = decltype(fn(0));
  std::vector<R> out(static_cast<size_t>(n));
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int i = 0; i < n; ++i) out[i] = fn(i);
#else
  for (int i = 0; i < n; ++i) out[i] = fn(i);
#endif
  return out;
}

}  // namespace bondsem
