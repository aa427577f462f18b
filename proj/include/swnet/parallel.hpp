#ifndef SWNET_PARALLEL_HPP
#define SWNET_PARALLEL_HPP

namespace swnet {

// Worker-thread count used by the OpenMP kernels. 0 = hardware default.
// Affects wall time only; every kernel writes to preallocated slots (or merges
// per-chunk results in a fixed order), so output bytes never depend on it.
void set_workers(int count);
int workers();

// Value to pass to num_threads() clauses: never 0.
int effective_workers();

}  // namespace swnet

#endif
