#ifndef SWNET_KNOWLEDGE_HPP
#define SWNET_KNOWLEDGE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "swnet/vertex_space.hpp"

namespace swnet {

// A set of directed edges on a space, read as "facts" about connectivity.
// Stored raw; equality of knowledge is closure equality (below), not set
// equality.
struct KnowledgeSet {
  int n = 0;  // vertex count of the space
  std::vector<Edge> edges;

  static KnowledgeSet make(int n, std::vector<Edge> edges);
  static KnowledgeSet make(const VertexSpace& space, std::vector<Edge> edges);
  bool contains(Edge e) const;
  KnowledgeSet with_edge(Edge e) const;  // insert (no-op if present)

  std::string to_string(const VertexSpace& space) const;  // "a->b,c->d" ("" when empty)
  static KnowledgeSet parse(const VertexSpace& space, std::string_view text);

  bool operator==(const KnowledgeSet&) const = default;
};

// Deductive closure. While s->t is underivable it is the set of all pairs
// (v, w) with a directed v->w path; once an s->t path exists everything is
// derivable, recorded as `complete` without materializing the edges.
struct KnowledgeClosure {
  int n = 0;
  bool complete = false;
  std::vector<Edge> edges;  // empty when complete

  bool operator==(const KnowledgeClosure&) const = default;
};

// Requires n <= 32.
KnowledgeClosure closure(const KnowledgeSet& k);
bool closure_subset(const KnowledgeClosure& a, const KnowledgeClosure& b);

bool k_equal(const KnowledgeSet& a, const KnowledgeSet& b);
bool k_subset(const KnowledgeSet& a, const KnowledgeSet& b);

// Can two knowledge states sit at the ends of an edge carrying this label?
// Both must be recoverable from the other plus the labeled fact.
bool step_valid(const KnowledgeSet& k1, const KnowledgeSet& k2, Edge label);

// Reachability of k2 from k1 under the three reversible moves, where the
// toggle move (1) may only touch `label`:
//   1. toggle `label` itself;
//   2. toggle a->c when some a->b, b->c are present (a != c);
//   3. toggle anything except s->t while s->t is present.
// Budget caps visited raw states; tri-state answer.
enum class OpsReach { kReachable, kUnreachable, kBudgetExhausted };
OpsReach ops_reachable(const KnowledgeSet& k1, const KnowledgeSet& k2, Edge label,
                       uint64_t budget = 1u << 22);

// Connected components of *all* raw edge subsets on an n-vertex space under
// the moves above (one label). Component id per state bitmask, edge bits in
// lexicographic (from, to) order. Needs n(n-1) <= 24.
std::vector<int32_t> raw_op_components(int n, Edge label);
uint32_t raw_edge_bits(const KnowledgeSet& k);  // bitmask in the same encoding

// K_V: s reaches every vertex of the set (interior mask).
KnowledgeSet build_kv(const VertexSpace& space, uint32_t interior_mask);

// Every possible label. Labels into s and out of t are degenerate (they can
// only join equal-knowledge endpoints) and are omitted by default.
std::vector<Edge> standard_labels(const VertexSpace& space, bool include_degenerate = false);

}  // namespace swnet

#endif
