#include "swnet/parallel.hpp"

#include <omp.h>

namespace swnet {

namespace {
int g_workers = 0;
}

void set_workers(int count) { g_workers = count < 0 ? 0 : count; }

int workers() { return g_workers; }

int effective_workers() {
  if (g_workers > 0) return g_workers;
  int n = omp_get_max_threads();
  return n > 0 ? n : 1;
}

}  // namespace swnet
