#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swnet/network.hpp"

namespace swnet {

// Assignment of a knowledge set to every vertex of a network.
struct CkDescription {
  std::map<int, KnowledgeSet> assignment;
};

struct CkValidation {
  bool valid = false;
  std::string reason;                 // empty when valid
  std::optional<NetEdge> violation;   // set for per-edge failures
};

// Checks that the description makes the network a certain-knowledge network:
// s' carries (the closure class of) the empty set, t' carries {s->t}, and every
// labeled edge joins two knowledge states that are one valid step apart.
// Network must be monotone and the description must cover every vertex.
CkValidation validate_ck(const SwitchingNetwork& net, const CkDescription& d);

struct BasicCkOptions {
  bool include_degenerate_labels = false;  // labels into s / out of t
  uint64_t vertex_limit = 1u << 22;
};

struct CkNetwork {
  SwitchingNetwork net;
  CkDescription description;
};

// The canonical certain-knowledge network on `space` with parameter m:
// one vertex per interior subset V with |V| <= m carrying {s->v : v in V},
// plus t' carrying {s->t}; every edge allowed by the step condition.
// Vertices are ordered by ascending subset mask, t' last; s' is vertex 0.
CkNetwork build_basic_ck(const VertexSpace& space, int m, const BasicCkOptions& options = {});

// Least m for which build_basic_ck(space, m) accepts every member. All members
// must contain an s->t path (so acceptance plus the networks' unconditional
// soundness gives "solves"). Throws build_error if no m <= N-2 works.
int compute_sc(const VertexSpace& space, const std::vector<InputGraph>& members,
               const BasicCkOptions& options = {});

}  // namespace swnet
