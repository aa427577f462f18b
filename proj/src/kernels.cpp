#include "swnet/kernels.hpp"

#include <stdexcept>

#include "swnet/cut.hpp"
#include "swnet/errors.hpp"
#include "swnet/parallel.hpp"
#include "swnet/transitions.hpp"

namespace swnet {

namespace {

// Union-find connectivity of s'/t' over non-crossing edges of one cut.
bool disconnected_under_cut(const SwitchingNetwork& net, const Cut& cut,
                            std::vector<int32_t>& parent) {
  const int n = net.vertex_count();
  parent.resize(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const NetEdge& e : net.edges) {
    if (crosses(e.label.edge, cut)) continue;
    int32_t a = find(e.u), b = find(e.v);
    if (a != b) parent[b] = a;
  }
  return find(net.s_prime) != find(net.t_prime);
}

std::vector<uint8_t> disconnect_flags_impl(const SwitchingNetwork& net, uint64_t cut_limit) {
  const uint64_t count = cut_count(net.space);
  if (count > cut_limit)
    throw limit_error("soundness sweep over " + std::to_string(count) +
                      " cuts, over the limit of " + std::to_string(cut_limit));
  std::vector<uint8_t> flags(count, 0);
  const int ni = net.space.interior();
#pragma omp parallel num_threads(effective_workers())
  {
    std::vector<int32_t> scratch;
#pragma omp for schedule(static)
    for (int64_t i = 0; i < static_cast<int64_t>(count); ++i)
      flags[i] = disconnected_under_cut(net, Cut{static_cast<uint32_t>(i), ni}, scratch);
  }
  return flags;
}

std::vector<NetEdge> condition_edges_impl(const std::vector<KnowledgeSet>& knowledge,
                                          const std::vector<Edge>& labels,
                                          const VertexSpace& space) {
  const int n = static_cast<int>(knowledge.size());
  const int nl = static_cast<int>(labels.size());
  for (const KnowledgeSet& k : knowledge)
    if (k.n != space.n) throw std::invalid_argument("knowledge on a different space");

  // closure(K_u) and closure(K_u + label) for every vertex/label pair
  std::vector<KnowledgeClosure> plain(n);
  std::vector<std::vector<KnowledgeClosure>> with_label(n);
  std::vector<std::vector<NetEdge>> rows(n);

  auto fill = [&](int u) {
    plain[u] = closure(knowledge[u]);
    with_label[u].reserve(nl);
    for (const Edge& e : labels) with_label[u].push_back(closure(knowledge[u].with_edge(e)));
  };
  auto sweep = [&](int u) {
    for (int v = u + 1; v < n; ++v)
      for (int li = 0; li < nl; ++li)
        if (closure_subset(plain[v], with_label[u][li]) &&
            closure_subset(plain[u], with_label[v][li]))
          rows[u].push_back(NetEdge{u, v, Label{labels[li], false}});
  };

#pragma omp parallel for schedule(static) num_threads(effective_workers())
  for (int u = 0; u < n; ++u) fill(u);
#pragma omp parallel for schedule(dynamic, 1) num_threads(effective_workers())
  for (int u = 0; u < n; ++u) sweep(u);

  std::vector<NetEdge> out;
  for (int u = 0; u < n; ++u)
    out.insert(out.end(), rows[u].begin(), rows[u].end());
  return out;
}

std::vector<uint8_t> transition_flags_impl(const SwitchingNetwork& net) {
  const int m = static_cast<int>(net.edges.size());
  std::vector<const CutFunction*> fn(net.vertex_count(), nullptr);
  for (int i = 0; i < net.vertex_count(); ++i) {
    const CutFunction* f = std::get_if<CutFunction>(&net.annotations[i]);
    if (!f) throw std::invalid_argument("transition flags need cut-function annotations");
    fn[i] = f;
  }
  for (const NetEdge& e : net.edges)
    if (e.label.negated) throw std::invalid_argument("transition flags need a monotone network");

  std::vector<uint8_t> flags(m, 0);
#pragma omp parallel for schedule(static) num_threads(effective_workers())
  for (int i = 0; i < m; ++i) {
    const NetEdge& e = net.edges[i];
    flags[i] = can_transition(*fn[e.u], *fn[e.v], e.label.edge, net.space);
  }
  return flags;
}

}  // namespace

std::vector<uint8_t> cut_disconnect_flags(const SwitchingNetwork& net, uint64_t cut_limit) {
  return disconnect_flags_impl(net, cut_limit);
}

std::vector<NetEdge> condition_edges(const std::vector<KnowledgeSet>& knowledge,
                                     const std::vector<Edge>& labels, const VertexSpace& space) {
  return condition_edges_impl(knowledge, labels, space);
}

std::vector<uint8_t> transition_flags(const SwitchingNetwork& net) {
  return transition_flags_impl(net);
}

// Plain single-threaded implementations, deliberately written the simple way
// (per-cut BFS, public step_valid / can_transition per pair) so the optimized
// kernels above have something independent to be compared against.
namespace serial {

std::vector<uint8_t> cut_disconnect_flags(const SwitchingNetwork& net, uint64_t cut_limit) {
  const uint64_t count = cut_count(net.space);
  if (count > cut_limit)
    throw limit_error("soundness sweep over " + std::to_string(count) +
                      " cuts, over the limit of " + std::to_string(cut_limit));
  const int ni = net.space.interior();
  std::vector<uint8_t> flags(count, 0);
  for (uint64_t ci = 0; ci < count; ++ci) {
    Cut cut{static_cast<uint32_t>(ci), ni};
    std::vector<char> seen(net.vertex_count(), 0);
    std::vector<int> stack{net.s_prime};
    seen[net.s_prime] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const NetEdge& e : net.edges) {
        if (crosses(e.label.edge, cut)) continue;
        int w = e.u == v ? e.v : (e.v == v ? e.u : -1);
        if (w >= 0 && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    flags[ci] = !seen[net.t_prime];
  }
  return flags;
}

std::vector<NetEdge> condition_edges(const std::vector<KnowledgeSet>& knowledge,
                                     const std::vector<Edge>& labels, const VertexSpace& space) {
  for (const KnowledgeSet& k : knowledge)
    if (k.n != space.n) throw std::invalid_argument("knowledge on a different space");
  std::vector<NetEdge> out;
  const int n = static_cast<int>(knowledge.size());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (const Edge& e : labels)
        if (step_valid(knowledge[u], knowledge[v], e))
          out.push_back(NetEdge{u, v, Label{e, false}});
  return out;
}

std::vector<uint8_t> transition_flags(const SwitchingNetwork& net) {
  std::vector<uint8_t> flags(net.edges.size(), 0);
  for (size_t i = 0; i < net.edges.size(); ++i) {
    const NetEdge& e = net.edges[i];
    if (e.label.negated) throw std::invalid_argument("transition flags need a monotone network");
    const CutFunction* fu = std::get_if<CutFunction>(&net.annotations[e.u]);
    const CutFunction* fv = std::get_if<CutFunction>(&net.annotations[e.v]);
    if (!fu || !fv) throw std::invalid_argument("transition flags need cut-function annotations");
    flags[i] = can_transition_bruteforce(*fu, *fv, e.label.edge, net.space);
  }
  return flags;
}

}  // namespace serial

}  // namespace swnet
