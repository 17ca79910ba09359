#pragma once

// Deterministic parallel primitives. Reductions accumulate fixed-size blocks
// serially and combine the partials in block order, so the result is the same
// for any thread count (and bit-identical across repeated runs).

#include <algorithm>
#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace contactflow {

inline constexpr std::size_t kReductionBlock = 4096;

template <class F>
void parallel_for(std::size_t n, F&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    body(static_cast<std::size_t>(i));
  }
}

/// Sum f(0) + ... + f(n-1) with a fixed, thread-count independent order.
template <class F>
double det_sum(std::size_t n, F&& f) {
  if (n == 0) return 0.0;
  const std::size_t nblocks = (n + kReductionBlock - 1) / kReductionBlock;
  std::vector<double> partial(nblocks, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kReductionBlock;
    const std::size_t hi = std::min(n, lo + kReductionBlock);
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += f(i);
    partial[static_cast<std::size_t>(b)] = s;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

inline double det_dot(const std::vector<double>& a, const std::vector<double>& b) {
  return det_sum(a.size(), [&](std::size_t i) { return a[i] * b[i]; });
}

/// Max of |f(i)|; max is order independent, so a plain reduction is fine.
template <class F>
double max_abs(std::size_t n, F&& f) {
  double m = 0.0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(max : m)
#endif
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    const double v = std::abs(f(static_cast<std::size_t>(i)));
    if (v > m) m = v;
  }
  return m;
}

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace contactflow
