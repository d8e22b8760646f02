#ifndef LATTICEALG_PARALLEL_HPP
#define LATTICEALG_PARALLEL_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace latticealg {

/// Execution backend for the enumeration kernels. Serial is the reference
/// implementation; Parallel uses OpenMP when compiled in and falls back to
/// the serial path otherwise. Both produce bit-identical results: every
/// reduction below combines exact scalars, whose addition is associative.
enum class Backend { Serial, Parallel };

inline int backend_thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Per-index accumulation into per-thread copies of an accumulator vector,
/// merged termwise at the end. `body(index, accumulator)` must only touch its
/// own accumulator.
template <typename Value, typename Body, typename Merge>
std::vector<Value> bucket_reduce(std::size_t count, std::size_t buckets, Backend backend,
                                 Body&& body, Merge&& merge) {
  std::vector<Value> result(buckets, Value{});
#ifdef _OPENMP
  if (backend == Backend::Parallel) {
    const int threads = backend_thread_count();
    std::vector<std::vector<Value>> partials(threads, std::vector<Value>(buckets, Value{}));
#pragma omp parallel num_threads(threads)
    {
      std::vector<Value>& local = partials[omp_get_thread_num()];
#pragma omp for schedule(static)
      for (long long index = 0; index < static_cast<long long>(count); ++index) {
        body(static_cast<std::size_t>(index), local);
      }
    }
    for (const std::vector<Value>& partial : partials) {
      for (std::size_t b = 0; b < buckets; ++b) merge(result[b], partial[b]);
    }
    return result;
  }
#endif
  (void)backend;
  for (std::size_t index = 0; index < count; ++index) body(index, result);
  return result;
}

/// Independent per-index map into a preallocated output slot.
template <typename Body>
void parallel_for(std::size_t count, Backend backend, Body&& body) {
#ifdef _OPENMP
  if (backend == Backend::Parallel) {
#pragma omp parallel for schedule(static)
    for (long long index = 0; index < static_cast<long long>(count); ++index) {
      body(static_cast<std::size_t>(index));
    }
    return;
  }
#endif
  (void)backend;
  for (std::size_t index = 0; index < count; ++index) body(index);
}

}  // namespace latticealg

#endif  // LATTICEALG_PARALLEL_HPP
