#pragma once

#include <cstddef>

namespace affhecke {

/// Selects between the serial reference kernels and their OpenMP versions.
/// Both produce identical results; the serial path exists for testing and for
/// byte-determinism comparisons.
enum class ExecMode { Serial, Parallel };

int max_threads();
void set_num_threads(int threads);

/// Runs body(i) for i in [0, count). Parallel mode uses a dynamic OpenMP
/// schedule; the caller collects per-index results so that order never
/// matters.
template <class Body>
void parallel_for(ExecMode mode, std::ptrdiff_t count, Body&& body) {
  if (mode == ExecMode::Serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i) body(i);
    return;
  }
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) body(i);
}

}  // namespace affhecke
