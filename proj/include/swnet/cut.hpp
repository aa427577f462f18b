#ifndef SWNET_CUT_HPP
#define SWNET_CUT_HPP

#include <cstdint>
#include <vector>

#include "swnet/vertex_space.hpp"

namespace swnet {

// s-t cut: a 2-partition (L, R) of the vertices with s in L and t in R.
// Interior membership in L is a bitmask in interior-index order, so cuts of a
// space are indexed 0 .. 2^(n-2)-1 (little-endian: bit i = u(i+1) on the left).
struct Cut {
  uint32_t left_mask = 0;
  int interior_count = 0;

  uint64_t index() const { return left_mask; }
  bool left_contains(int vertex) const {
    if (vertex == kS) return true;
    if (vertex == kT) return false;
    return (left_mask >> (vertex - 2)) & 1u;
  }
};

Cut cut_from_index(const VertexSpace& space, uint64_t index);

// The edge leaves the left side: from in L and to in R.
bool crosses(Edge e, const Cut& c);

inline constexpr uint64_t kDefaultCutLimit = uint64_t{1} << 24;

// All 2^(n-2) cuts in index order; throws limit_error past `limit`.
std::vector<Cut> enumerate_cuts(const VertexSpace& space, uint64_t limit = kDefaultCutLimit);

// 2^(n-2); requires interior <= 62.
uint64_t cut_count(const VertexSpace& space);

}  // namespace swnet

#endif
