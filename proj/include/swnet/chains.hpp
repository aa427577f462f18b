#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "swnet/cut_function.hpp"
#include "swnet/partition.hpp"
#include "swnet/vertex_space.hpp"

namespace swnet {

// (-1)^{|left ∩ v|}, returns +1 or -1.
int theta(uint32_t v_mask, uint32_t left_mask);

// The cut-function image of the knowledge set {s->v : v in V}:
//   e_{} - 2^{1-|V|} sum_{U ⊆ V} (-1)^{|U|} e_U.
// V = ∅ gives -e_{}.
CutFunction embed_knowledge(const VertexSpace& space, uint32_t v_mask);

// Block-level analogue of embed_knowledge:
//   e_{} - 2^{1-|I|} sum_{J ⊆ I} (-1)^{|J|} (prod_{i in J} θ_i) e_{(∪_{i in J} blocks_i)}.
// θ_i = -1 exactly for the bits of minus_mask; i_mask = ∅ gives -e_{}.
CutFunction base_function(const VertexSpace& space, const Partition& q, uint32_t i_mask,
                          uint32_t minus_mask);

// {v*} ∪ (block ∩ {first n interior vertices}).
uint32_t grown_set(uint32_t block_mask, int vstar, int n);

// Interpolant between base_function(I \ {j}) and base_function(I): the grown
// block j enters through grown_set(V_j, v*_j, n) with its own sign sigma.
//   e_{} - 2^{1-|I|} sum_{J ⊆ I\{j}} (-1)^{|J|} (prod θ) (e_W - sigma e_{W ∪ Vjn})
CutFunction growth_function(const VertexSpace& space, const Partition& q, uint32_t i_mask, int j,
                            int vstar_j, uint32_t minus_mask, int sigma, int n);

// Interpolant used when entering block j through an interior edge from block
// l's distinguished vertex; walks block l while carrying the singleton {v*_j}:
//   f + 2^{1-|I|} sum_{J ⊆ I\{j,l}} (-1)^{|J|} (prod θ)
//       (e_W - sigma e_{W∪Vln} + e_{W∪{v*_j}} - sigma e_{W∪Vln∪{v*_j}})
// where f = base_function(I \ {j}).
CutFunction relay_function(const VertexSpace& space, const Partition& q, uint32_t i_mask, int j,
                           int l, int vstar_j, int vstar_l, uint32_t minus_mask, int sigma, int n);

// Interpolant between the base functions of two partitions: block i is the
// hybrid (q2_i ∩ first-n) ∪ (q1_i ∩ rest), with sign τ_i from minus_mask.
CutFunction hybrid_function(const VertexSpace& space, const Partition& q1, const Partition& q2,
                            uint32_t i_mask, uint32_t minus_mask, int n);

enum class ChainKind { kStart, kEnd, kProgress, kSwitch };

struct ChainSpec {
  ChainKind kind = ChainKind::kStart;
  VertexSpace space;
  Partition q1;            // the partition; for kSwitch the source partition
  Partition q2;            // kSwitch only: the target partition
  uint32_t i_mask = 0;     // nonempty set of block indices, for kStart the full target set
  int grown_block = -1;    // start/progress: j (entered block); end: the retired block
  int helper_block = -1;   // progress only: l, the block whose v* has the edge to v*_j
  int vstar_grown = -1;    // interior index of v*_j (v*_l for kEnd)
  int vstar_helper = -1;   // progress only: interior index of v*_l
  uint32_t left_mask = 0;  // vertices with an s->v edge available
  uint32_t right_mask = 0; // vertices with a v->t edge available
};

struct ChainStep {
  CutFunction fn;
  std::optional<Edge> label;  // edge used to arrive from the previous function;
                              // empty for the first element and for no-op steps
};

// The function sequence the spec's kind stands for:
//   start:    f = base(I\{j}) -> ... -> base(I), first edge s->v*_j
//   end:      base(I) -> ... -> e_{}, last edge v*_l->t
//   progress: f = base(I\{j}) -> relays -> growths -> base(I), first edge v*_l->v*_j
//   switch:   base under q1 -> hybrids -> base under q2
// No-op steps (equal consecutive functions) carry no label. Throws
// std::invalid_argument when the spec violates the construction's hypotheses.
std::vector<ChainStep> gen_chain(const ChainSpec& spec);

}  // namespace swnet
