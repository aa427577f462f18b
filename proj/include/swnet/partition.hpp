#pragma once

#include <cstdint>
#include <vector>

#include "swnet/vertex_space.hpp"

namespace swnet {

// Ordered partition of the interior into k blocks (blocks may be empty).
struct Partition {
  std::vector<uint32_t> blocks;  // disjoint interior masks, union = full interior

  static Partition make(const VertexSpace& space, std::vector<uint32_t> blocks);
  int k() const { return static_cast<int>(blocks.size()); }
  int block_of(int interior_index) const;
};

// True iff for every block index i in i_mask, the block's intersection with
// the tuple set is exactly {tuple[i]}.
bool covers(const Partition& q, const std::vector<int>& tuple, uint32_t i_mask);

struct PartitionCover {
  std::vector<Partition> partitions;
  int rounds_used = 0;
  uint64_t seed = 0;
};

// Seeded random block assignment with greedy retention: keep each drawn
// partition that covers at least one still-uncovered requirement, where the
// requirements are all (ordered k-tuple of distinct interior vertices,
// nonempty block-index set of size <= m) pairs. Verified exhaustively before
// returning. Throws build_error if the round cap is hit (retry with another
// seed); round_cap = 0 picks a generous default.
PartitionCover build_partition_cover(const VertexSpace& space, int k, int m, uint64_t seed,
                                     int round_cap = 0);

}  // namespace swnet
