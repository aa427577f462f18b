#ifndef SWNET_TRANSITIONS_HPP
#define SWNET_TRANSITIONS_HPP

#include <vector>

#include "swnet/cut_function.hpp"
#include "swnet/vertex_space.hpp"

namespace swnet {

// True iff f and g agree on every cut the labeled edge does not cross, i.e. a
// network edge labeled so may join vertices carrying f and g. Decided on the
// coefficients of d = g - f, by label shape:
//   s->v  (v interior):      d(V) == d(V + v) for all V without v
//   v->t  (v interior):      d(V + v) == -d(V)
//   v->w  (both interior):   d(V + v) == -d(V), d(V + w) == d(V), d(V+v+w) == -d(V)
//   s->t:                    always (every cut is crossed)
//   into s / out of t:       only when d == 0 (no cut is crossed)
bool can_transition(const CutFunction& f, const CutFunction& g, Edge label,
                    const VertexSpace& space);

// Same predicate straight from the definition, enumerating all cuts.
bool can_transition_bruteforce(const CutFunction& f, const CutFunction& g, Edge label,
                               const VertexSpace& space);

// BFS over a fixed function set with can_transition edges. `steps` lists
// (function index, label used to get there) from after `from` up to `to`.
struct FnReachResult {
  bool reachable = false;
  std::vector<std::pair<int, Edge>> steps;
};

FnReachResult reach(const std::vector<CutFunction>& h_set, const std::vector<Edge>& labels,
                    int from, int to, const VertexSpace& space);

}  // namespace swnet

#endif
