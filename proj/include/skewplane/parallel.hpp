#pragma once

#include <cstddef>
#include <optional>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace skewplane {

enum class Exec { serial, parallel };

/// Scan the index grid [0, n) with a pure predicate and report the smallest
/// failing index, if any. The serial path is the reference implementation;
/// the OpenMP path partitions the grid and merges with a min-reduction, so
/// both paths return identical results.
template <class Pred>
std::optional<std::size_t> first_failure(std::size_t n, Pred&& pred,
                                         Exec exec = Exec::parallel) {
#if defined(_OPENMP)
  if (exec == Exec::parallel) {
    long long bad = static_cast<long long>(n);
    const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(static) reduction(min : bad)
    for (long long i = 0; i < nn; ++i) {
      if (!pred(static_cast<std::size_t>(i)) && i < bad) bad = i;
    }
    if (bad < nn) return static_cast<std::size_t>(bad);
    return std::nullopt;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i)
    if (!pred(i)) return i;
  return std::nullopt;
}

/// Count predicate failures over [0, n); same serial/OpenMP split.
template <class Pred>
std::size_t count_failures(std::size_t n, Pred&& pred, Exec exec = Exec::parallel) {
#if defined(_OPENMP)
  if (exec == Exec::parallel) {
    long long bad = 0;
    const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(static) reduction(+ : bad)
    for (long long i = 0; i < nn; ++i)
      if (!pred(static_cast<std::size_t>(i))) ++bad;
    return static_cast<std::size_t>(bad);
  }
#else
  (void)exec;
#endif
  std::size_t bad = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (!pred(i)) ++bad;
  return bad;
}

}  // namespace skewplane
