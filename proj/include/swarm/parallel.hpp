#pragma once

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace swarm {

// Execution policy for the agent-loop kernels and batch runner. Serial is the
// reference implementation; Parallel must produce bit-identical results.
enum class Exec { Serial, Parallel };

// Thread budget for parallel sections. SWARM_THREADS caps it when set.
inline int thread_budget() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  if (const char* cap = std::getenv("SWARM_THREADS")) {
    const int c = std::atoi(cap);
    if (c >= 1) n = c;
  }
  return n;
}

}  // namespace swarm
