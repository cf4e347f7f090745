#pragma once

#include <algorithm>
#include <cstdlib>
#include <iterator>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace reebspec {

/// Worker cap: REEB_SPECTRA_THREADS if set (clamped to >= 1), else the
/// OpenMP default. Serial builds report 1.
inline int max_threads() {
#ifdef _OPENMP
  if (const char* env = std::getenv("REEB_SPECTRA_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace detail {

template <class It, class Cmp>
void merge_sort_rec(It first, It last, Cmp cmp, int depth) {
  const auto n = std::distance(first, last);
  if (n < 4096 || depth <= 0) {
    std::sort(first, last, cmp);
    return;
  }
  It mid = first + n / 2;
#ifdef _OPENMP
#pragma omp task untied shared(cmp)
#endif
  merge_sort_rec(first, mid, cmp, depth - 1);
  merge_sort_rec(mid, last, cmp, depth - 1);
#ifdef _OPENMP
#pragma omp taskwait
#endif
  std::inplace_merge(first, mid, last, cmp);
}

}  // namespace detail

/// Task-parallel merge sort. The comparator must induce a strict total
/// order, which makes the output independent of the thread schedule.
template <class It, class Cmp>
void parallel_sort(It first, It last, Cmp cmp) {
  const int threads = max_threads();
  if (threads <= 1 || std::distance(first, last) < 8192) {
    std::sort(first, last, cmp);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
#pragma omp single nowait
#endif
  detail::merge_sort_rec(first, last, cmp, 10);
}

}  // namespace reebspec
