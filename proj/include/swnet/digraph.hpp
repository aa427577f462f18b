#ifndef SWNET_DIGRAPH_HPP
#define SWNET_DIGRAPH_HPP

#include <vector>

#include "swnet/vertex_space.hpp"

namespace swnet {

// Directed graph on a vertex space. Edge list is sorted and duplicate-free;
// self loops are rejected. Parallel edges cannot be represented (inputs are
// edge *sets*).
struct InputGraph {
  VertexSpace space;
  std::vector<Edge> edges;

  static InputGraph make(VertexSpace space, std::vector<Edge> edges);
  bool has_edge(Edge e) const;
};

bool has_st_path(const InputGraph& g);

// s -> u1 -> ... -> uk -> t on a fresh (k+2)-vertex space; k = 0 gives s -> t.
InputGraph make_path_graph(int k);

}  // namespace swnet

#endif
