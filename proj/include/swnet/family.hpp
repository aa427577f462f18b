#ifndef SWNET_FAMILY_HPP
#define SWNET_FAMILY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "swnet/digraph.hpp"

namespace swnet {

// One lifted input: the base graph planted on the ordered vertex tuple v0,
// every left vertex fed from s, every right vertex feeding t.
struct FamilyMember {
  std::vector<int> v0;      // v0[i] = target vertex playing base interior i
  uint32_t left_mask = 0;   // interior-index masks over the target space
  uint32_t right_mask = 0;
  InputGraph graph;
};

struct InputFamily {
  std::string name;
  InputGraph base;    // on its own (k+2)-vertex space
  VertexSpace space;  // target space (n vertices)
  bool allow_left = true;
  bool allow_right = true;
  std::vector<FamilyMember> members;  // enumeration order, duplicate edge sets dropped
};

InputGraph build_augmented_input(const InputGraph& base, const VertexSpace& space,
                                 const std::vector<int>& v0, uint32_t left_mask,
                                 uint32_t right_mask);

inline constexpr uint64_t kDefaultFamilyLimit = uint64_t{1} << 20;

// All plantings of `base` into `space`: ordered tuples v0 in lexicographic
// order (interior-index sequences), then the left/right split of the
// complement in mask order. allow_left=false forces every leftover vertex
// right, allow_right=false forces them all left.
InputFamily enumerate_family(const InputGraph& base, const VertexSpace& space, bool allow_left,
                             bool allow_right, uint64_t limit = kDefaultFamilyLimit,
                             std::string name = "family");

void write_family(std::ostream& out, const InputFamily& family);

// The on-disk format records edge sets only, not the (v0, L, R) parameters.
struct LoadedFamily {
  std::string name;
  VertexSpace space;
  int k = 0;
  std::vector<InputGraph> graphs;
};

LoadedFamily read_family(std::istream& in);

}  // namespace swnet

#endif
