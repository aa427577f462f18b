#include "swnet/network.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "swnet/bigmath.hpp"
#include "swnet/errors.hpp"
#include "swnet/kernels.hpp"
#include "swnet/transitions.hpp"

namespace swnet {

std::string Label::to_string(const VertexSpace& space) const {
  return (negated ? "!" : "") + space.edge_name(edge);
}

Label Label::parse(const VertexSpace& space, std::string_view text) {
  Label l;
  if (!text.empty() && text[0] == '!') {
    l.negated = true;
    text.remove_prefix(1);
  }
  l.edge = space.parse_edge(text);
  return l;
}

SwitchingNetwork SwitchingNetwork::make(VertexSpace space, int vertex_count, int s_prime,
                                        int t_prime, std::vector<NetEdge> edges,
                                        std::vector<Annotation> annotations) {
  if (vertex_count < 1) throw std::invalid_argument("network needs at least one vertex");
  if (s_prime < 0 || s_prime >= vertex_count || t_prime < 0 || t_prime >= vertex_count)
    throw std::invalid_argument("s'/t' out of range");
  if (annotations.empty()) annotations.resize(vertex_count);
  if (static_cast<int>(annotations.size()) != vertex_count)
    throw std::invalid_argument("annotation count mismatch");
  for (NetEdge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw std::invalid_argument("network self loops are not allowed");
    if (e.u < 0 || e.v >= vertex_count) throw std::invalid_argument("network edge out of range");
    if (!space.contains(e.label.edge.from) || !space.contains(e.label.edge.to) ||
        e.label.edge.from == e.label.edge.to)
      throw std::invalid_argument("label edge outside ground space");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return SwitchingNetwork{space, s_prime, t_prime, std::move(annotations), std::move(edges)};
}

bool SwitchingNetwork::monotone() const {
  for (const NetEdge& e : edges)
    if (e.label.negated) return false;
  return true;
}

namespace {

bool label_consistent(const Label& l, const InputGraph& g) {
  return l.negated ? !g.has_edge(l.edge) : g.has_edge(l.edge);
}

struct Adjacency {
  std::vector<std::vector<std::pair<int, int>>> out;  // vertex -> (neighbor, edge index)

  static Adjacency consistent(const SwitchingNetwork& net, const InputGraph& g) {
    Adjacency a;
    a.out.resize(net.vertex_count());
    for (size_t i = 0; i < net.edges.size(); ++i) {
      const NetEdge& e = net.edges[i];
      if (!label_consistent(e.label, g)) continue;
      a.out[e.u].push_back({e.v, static_cast<int>(i)});
      a.out[e.v].push_back({e.u, static_cast<int>(i)});
    }
    return a;
  }
};

}  // namespace

AcceptResult accepts(const SwitchingNetwork& net, const InputGraph& g) {
  if (net.space != g.space) throw std::invalid_argument("input lives on a different space");
  AcceptResult r;
  if (net.s_prime == net.t_prime) {
    r.accepted = true;
    return r;
  }
  Adjacency adj = Adjacency::consistent(net, g);
  std::vector<int> prev_vertex(net.vertex_count(), -1), prev_edge(net.vertex_count(), -1);
  std::vector<char> seen(net.vertex_count(), 0);
  std::vector<int> frontier{net.s_prime};
  seen[net.s_prime] = 1;
  bool found = false;
  while (!frontier.empty() && !found) {
    std::vector<int> next;
    for (int v : frontier) {
      for (auto [w, ei] : adj.out[v]) {
        if (seen[w]) continue;
        seen[w] = 1;
        prev_vertex[w] = v;
        prev_edge[w] = ei;
        if (w == net.t_prime) {
          found = true;
          break;
        }
        next.push_back(w);
      }
      if (found) break;
    }
    frontier = std::move(next);
  }
  r.accepted = found;
  if (found) {
    std::vector<std::pair<int, Label>> rev;
    for (int v = net.t_prime; v != net.s_prime; v = prev_vertex[v])
      rev.push_back({v, net.edges[prev_edge[v]].label});
    std::reverse(rev.begin(), rev.end());
    r.walk = std::move(rev);
  }
  return r;
}

SoundnessResult is_sound_monotone(const SwitchingNetwork& net, uint64_t cut_limit) {
  if (!net.monotone()) throw std::invalid_argument("soundness criterion needs a monotone network");
  std::vector<uint8_t> flags = cut_disconnect_flags(net, cut_limit);
  for (size_t i = 0; i < flags.size(); ++i)
    if (!flags[i]) return SoundnessResult{false, i};
  return SoundnessResult{true, 0};
}

CompletenessResult is_complete_monotone(const SwitchingNetwork& net, uint64_t path_limit) {
  if (!net.monotone())
    throw std::invalid_argument("completeness check implemented for monotone networks");
  const int ni = net.space.interior();

  mpz_class total = 0;
  for (int r = 0; r <= ni; ++r) total += factorial(ni) / factorial(ni - r);
  if (total > path_limit)
    throw limit_error("would enumerate " + total.get_str() + " bare paths, over the limit of " +
                      std::to_string(path_limit));

  // bare path through the interior sequence `seq`
  auto test = [&](const std::vector<int>& seq) {
    std::vector<Edge> edges;
    int prev = kS;
    for (int v : seq) {
      edges.push_back({prev, v});
      prev = v;
    }
    edges.push_back({prev, kT});
    return accepts(net, InputGraph::make(net.space, std::move(edges))).accepted;
  };

  CompletenessResult res;
  res.complete = true;
  std::vector<int> seq;
  std::vector<char> used(ni, 0);
  auto rec = [&](auto&& self) -> bool {
    if (!test(seq)) {
      res.complete = false;
      res.counterexample_path = seq;
      return false;
    }
    for (int c = 0; c < ni; ++c) {
      if (used[c]) continue;
      used[c] = 1;
      seq.push_back(net.space.interior_vertex(c));
      bool ok = self(self);
      seq.pop_back();
      used[c] = 0;
      if (!ok) return false;
    }
    return true;
  };
  rec(rec);
  return res;
}

SolveResult solves(const SwitchingNetwork& net, const std::vector<InputGraph>& accept_these,
                   const std::vector<InputGraph>& reject_these, uint64_t cut_limit,
                   uint64_t path_limit) {
  if (accept_these.empty() && reject_these.empty())
    throw std::invalid_argument("solves needs at least one input list");
  SolveResult r{true, ""};
  if (reject_these.empty()) {
    SoundnessResult s = is_sound_monotone(net, cut_limit);
    if (!s.sound)
      return SolveResult{false,
                         "not sound (cut " + std::to_string(s.counterexample_cut) + ")"};
  }
  if (accept_these.empty()) {
    CompletenessResult c = is_complete_monotone(net, path_limit);
    if (!c.complete) return SolveResult{false, "not complete"};
  }
  for (size_t i = 0; i < accept_these.size(); ++i)
    if (!accepts(net, accept_these[i]).accepted)
      return SolveResult{false, "input " + std::to_string(i) + " not accepted"};
  for (size_t i = 0; i < reject_these.size(); ++i)
    if (accepts(net, reject_these[i]).accepted)
      return SolveResult{false, "input " + std::to_string(i) + " wrongly accepted"};
  return r;
}

SwitchingNetwork build_gh(const VertexSpace& space, const std::vector<CutFunction>& h_set,
                          const std::vector<Edge>& labels, GhMode mode,
                          const std::vector<GhEdge>& constructive_edges, uint64_t pair_limit) {
  if (h_set.empty()) throw std::invalid_argument("empty function set");
  std::map<CutFunction, int> index;
  for (size_t i = 0; i < h_set.size(); ++i) {
    if (h_set[i].interior_count() != space.interior())
      throw std::invalid_argument("function on a different space");
    if (!index.emplace(h_set[i], static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate functions in h_set");
  }
  CutFunction minus_one = CutFunction::basis(space.interior(), 0, Dyadic(-1));
  CutFunction plus_one = CutFunction::basis(space.interior(), 0, Dyadic(1));
  auto s_it = index.find(minus_one);
  auto t_it = index.find(plus_one);
  if (s_it == index.end() || t_it == index.end())
    throw std::invalid_argument("h_set must contain the constant -1 and +1 functions");

  std::vector<Annotation> ann;
  ann.reserve(h_set.size());
  for (const CutFunction& f : h_set) ann.push_back(f);

  std::vector<NetEdge> edges;
  if (mode == GhMode::kFull) {
    const uint64_t pairs =
        static_cast<uint64_t>(h_set.size()) * (h_set.size() - 1) / 2 * labels.size();
    if (pairs > pair_limit)
      throw limit_error("full pair sweep of " + std::to_string(pairs) +
                        " checks, over the limit of " + std::to_string(pair_limit));
    for (size_t u = 0; u < h_set.size(); ++u)
      for (size_t v = u + 1; v < h_set.size(); ++v)
        for (const Edge& e : labels)
          if (can_transition(h_set[u], h_set[v], e, space))
            edges.push_back(NetEdge{static_cast<int>(u), static_cast<int>(v), Label{e, false}});
  } else {
    for (const GhEdge& ge : constructive_edges) {
      if (ge.u < 0 || ge.v < 0 || ge.u >= static_cast<int>(h_set.size()) ||
          ge.v >= static_cast<int>(h_set.size()) || ge.u == ge.v)
        throw std::invalid_argument("constructive edge endpoint out of range");
      edges.push_back(NetEdge{ge.u, ge.v, Label{ge.label, false}});
    }
  }

  SwitchingNetwork net = SwitchingNetwork::make(
      space, static_cast<int>(h_set.size()), s_it->second, t_it->second, std::move(edges),
      std::move(ann));

  if (mode == GhMode::kConstructive) {
    std::vector<uint8_t> ok = transition_flags(net);
    for (size_t i = 0; i < ok.size(); ++i)
      if (!ok[i])
        throw build_error("constructive edge " + std::to_string(i) +
                          " fails the transition condition");
  }
  return net;
}

std::vector<std::vector<std::pair<int, Label>>> enumerate_accepting_walks(
    const SwitchingNetwork& net, const InputGraph& g, uint64_t walk_limit) {
  if (net.space != g.space) throw std::invalid_argument("input lives on a different space");
  Adjacency adj = Adjacency::consistent(net, g);
  std::vector<std::vector<std::pair<int, Label>>> walks;
  std::vector<std::pair<int, Label>> cur;
  std::vector<char> on_path(net.vertex_count(), 0);

  // iterative DFS with explicit neighbor cursors, neighbors in edge order
  std::vector<size_t> cursor{0};
  std::vector<int> path{net.s_prime};
  on_path[net.s_prime] = 1;
  while (!path.empty()) {
    int v = path.back();
    if (v == net.t_prime && path.size() > 1) {
      walks.push_back(cur);
      if (walks.size() > walk_limit) throw limit_error("too many accepting walks");
      on_path[v] = 0;
      path.pop_back();
      cursor.pop_back();
      cur.pop_back();
      continue;
    }
    bool advanced = false;
    while (cursor.back() < adj.out[v].size()) {
      auto [w, ei] = adj.out[v][cursor.back()++];
      if (on_path[w]) continue;
      path.push_back(w);
      on_path[w] = 1;
      cur.push_back({w, net.edges[ei].label});
      cursor.push_back(0);
      advanced = true;
      break;
    }
    if (!advanced) {
      on_path[v] = 0;
      path.pop_back();
      cursor.pop_back();
      if (!cur.empty()) cur.pop_back();
    }
  }
  return walks;
}

}  // namespace swnet
