#include "swnet/digraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace swnet {

InputGraph InputGraph::make(VertexSpace space, std::vector<Edge> edges) {
  for (const Edge& e : edges) {
    if (!space.contains(e.from) || !space.contains(e.to))
      throw std::invalid_argument("edge endpoint outside space");
    if (e.from == e.to) throw std::invalid_argument("self loops are not allowed");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return InputGraph{space, std::move(edges)};
}

bool InputGraph::has_edge(Edge e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

bool has_st_path(const InputGraph& g) {
  std::vector<char> seen(g.space.n, 0);
  std::vector<int> stack{kS};
  seen[kS] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == kT) return true;
    // edges sorted by (from, to): scan the out-neighborhood of v
    auto it = std::lower_bound(g.edges.begin(), g.edges.end(), Edge{v, 0});
    for (; it != g.edges.end() && it->from == v; ++it) {
      if (!seen[it->to]) {
        seen[it->to] = 1;
        stack.push_back(it->to);
      }
    }
  }
  return false;
}

InputGraph make_path_graph(int k) {
  if (k < 0) throw std::invalid_argument("path length must be >= 0");
  VertexSpace space = VertexSpace::make(k + 2);
  std::vector<Edge> edges;
  if (k == 0) {
    edges.push_back({kS, kT});
  } else {
    edges.push_back({kS, space.interior_vertex(0)});
    for (int i = 0; i + 1 < k; ++i)
      edges.push_back({space.interior_vertex(i), space.interior_vertex(i + 1)});
    edges.push_back({space.interior_vertex(k - 1), kT});
  }
  return InputGraph::make(space, std::move(edges));
}

}  // namespace swnet
