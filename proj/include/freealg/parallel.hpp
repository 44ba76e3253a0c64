#pragma once

/*
 * Shared-nothing parallel map over an index range. Bodies must write only
 * to their own slot; all values in this library are immutable after
 * construction, so batches of independent symbolic computations satisfy
 * that by default.
 */

#include <cstddef>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace freealg {

inline bool parallel_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

template <class Body>
void par_for(std::size_t n, bool parallel, Body&& body) {
#ifdef _OPENMP
  if (parallel && n > 1) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
      body(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)parallel;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace freealg
