#ifndef SWNET_NETWORK_HPP
#define SWNET_NETWORK_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "swnet/cut.hpp"
#include "swnet/cut_function.hpp"
#include "swnet/digraph.hpp"
#include "swnet/knowledge.hpp"

namespace swnet {

// Edge label of a switching network: assert or deny one input edge.
struct Label {
  Edge edge;
  bool negated = false;
  auto operator<=>(const Label&) const = default;
  std::string to_string(const VertexSpace& space) const;  // "a->b" or "!a->b"
  static Label parse(const VertexSpace& space, std::string_view text);
};

// Optional per-vertex annotation: a knowledge state or a cut function.
using Annotation = std::variant<std::monostate, KnowledgeSet, CutFunction>;

struct NetEdge {
  int u = 0;
  int v = 0;  // u < v always
  Label label;
  auto operator<=>(const NetEdge&) const = default;
};

// Undirected multigraph over the inputs' ground space, with two distinguished
// vertices. A walk from s' to t' whose labels are all consistent with an input
// graph (asserted edges present, denied edges absent) accepts that input.
struct SwitchingNetwork {
  VertexSpace space;  // ground space of the *inputs*
  int s_prime = 0;
  int t_prime = 1;
  std::vector<Annotation> annotations;  // one per network vertex
  std::vector<NetEdge> edges;           // canonically sorted, unique

  static SwitchingNetwork make(VertexSpace space, int vertex_count, int s_prime, int t_prime,
                               std::vector<NetEdge> edges, std::vector<Annotation> annotations = {});
  int vertex_count() const { return static_cast<int>(annotations.size()); }
  bool monotone() const;  // no negated labels
};

struct AcceptResult {
  bool accepted = false;
  // Walk from s': (vertex arrived at, label of the edge used). Empty when
  // s' == t' or not accepted.
  std::vector<std::pair<int, Label>> walk;
};

AcceptResult accepts(const SwitchingNetwork& net, const InputGraph& g);

// A monotone network is sound (accepts only inputs with an s-t path) exactly
// when for every cut, the subnetwork of edges whose labels do not cross it
// leaves s' and t' disconnected.
struct SoundnessResult {
  bool sound = false;
  uint64_t counterexample_cut = 0;  // meaningful when !sound
};

SoundnessResult is_sound_monotone(const SwitchingNetwork& net,
                                  uint64_t cut_limit = kDefaultCutLimit);

// Completeness over bare simple s->t paths (every complete-inputs witness
// reduces to one); counterexample is the interior vertex sequence.
struct CompletenessResult {
  bool complete = false;
  std::vector<int> counterexample_path;
};

inline constexpr uint64_t kDefaultPathLimit = 1u << 20;

CompletenessResult is_complete_monotone(const SwitchingNetwork& net,
                                        uint64_t path_limit = kDefaultPathLimit);

struct SolveResult {
  bool solved = false;
  std::string reason;  // first failure, for reports
};

// Three-way contract: with both lists nonempty, accept the first and reject
// the second; with reject_these empty additionally be sound; with accept_these
// empty additionally be complete.
SolveResult solves(const SwitchingNetwork& net, const std::vector<InputGraph>& accept_these,
                   const std::vector<InputGraph>& reject_these,
                   uint64_t cut_limit = kDefaultCutLimit, uint64_t path_limit = kDefaultPathLimit);

// Network over a set of cut functions: vertices are the functions (s' must be
// -1 on all cuts, t' constantly +1), an edge labeled e joins two functions
// that agree on every cut e does not cross. kFull sweeps all pairs x labels;
// kConstructive installs only the provided candidate edges. Either way every
// installed edge is checked against can_transition.
enum class GhMode { kFull, kConstructive };

struct GhEdge {
  int u = 0;
  int v = 0;
  Edge label;
};

SwitchingNetwork build_gh(const VertexSpace& space, const std::vector<CutFunction>& h_set,
                          const std::vector<Edge>& labels, GhMode mode,
                          const std::vector<GhEdge>& constructive_edges = {},
                          uint64_t pair_limit = uint64_t{1} << 26);

// All simple accepting walks (vertex-disjoint, s' to t'), same step encoding
// as AcceptResult::walk. Throws limit_error past walk_limit.
std::vector<std::vector<std::pair<int, Label>>> enumerate_accepting_walks(
    const SwitchingNetwork& net, const InputGraph& g, uint64_t walk_limit = 100000);

}  // namespace swnet

#endif
