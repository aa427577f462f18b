#include "swnet/knowledge.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "swnet/errors.hpp"

namespace swnet {

KnowledgeSet KnowledgeSet::make(int n, std::vector<Edge> edges) {
  if (n < 2) throw std::invalid_argument("knowledge space needs n >= 2");
  for (const Edge& e : edges) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
      throw std::invalid_argument("knowledge edge endpoint outside space");
    if (e.from == e.to) throw std::invalid_argument("knowledge edges cannot be self loops");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return KnowledgeSet{n, std::move(edges)};
}

KnowledgeSet KnowledgeSet::make(const VertexSpace& space, std::vector<Edge> edges) {
  return make(space.n, std::move(edges));
}

bool KnowledgeSet::contains(Edge e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

KnowledgeSet KnowledgeSet::with_edge(Edge e) const {
  if (contains(e)) return *this;
  std::vector<Edge> es = edges;
  es.insert(std::upper_bound(es.begin(), es.end(), e), e);
  return KnowledgeSet{n, std::move(es)};
}

std::string KnowledgeSet::to_string(const VertexSpace& space) const {
  if (edges.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ",";
    out += space.edge_name(edges[i]);
  }
  return out;
}

KnowledgeSet KnowledgeSet::parse(const VertexSpace& space, std::string_view text) {
  std::vector<Edge> edges;
  if (text != "-" && !text.empty()) {
    std::istringstream ss{std::string(text)};
    std::string item;
    while (std::getline(ss, item, ',')) edges.push_back(space.parse_edge(item));
  }
  return make(space, std::move(edges));
}

KnowledgeClosure closure(const KnowledgeSet& k) {
  if (k.n > 32) throw std::invalid_argument("closure needs n <= 32");
  const int n = k.n;
  std::vector<uint32_t> adj(n, 0);
  for (const Edge& e : k.edges) adj[e.from] |= 1u << e.to;

  // reflexive reachability per source, then one edge-step for path length >= 1
  std::vector<uint32_t> reach(n, 0);
  for (int v = 0; v < n; ++v) {
    uint32_t seen = 1u << v;
    uint32_t frontier = seen;
    while (frontier) {
      uint32_t next = 0;
      for (uint32_t f = frontier; f;) {
        int w = std::countr_zero(f);
        f &= f - 1;
        next |= adj[w];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    reach[v] = seen;
  }
  std::vector<uint32_t> via_edge(n, 0);
  for (int v = 0; v < n; ++v) {
    uint32_t acc = 0;
    for (uint32_t f = adj[v]; f;) {
      int w = std::countr_zero(f);
      f &= f - 1;
      acc |= reach[w];
    }
    via_edge[v] = acc;
  }

  KnowledgeClosure c{k.n, false, {}};
  if ((via_edge[kS] >> kT) & 1u) {
    c.complete = true;
    return c;
  }
  for (int v = 0; v < n; ++v)
    for (uint32_t f = via_edge[v] & ~(1u << v); f;) {
      int w = std::countr_zero(f);
      f &= f - 1;
      c.edges.push_back({v, w});
    }
  std::sort(c.edges.begin(), c.edges.end());
  return c;
}

bool closure_subset(const KnowledgeClosure& a, const KnowledgeClosure& b) {
  if (a.n != b.n) throw std::invalid_argument("closure spaces differ");
  if (b.complete) return true;
  if (a.complete) return false;
  return std::includes(b.edges.begin(), b.edges.end(), a.edges.begin(), a.edges.end());
}

bool k_equal(const KnowledgeSet& a, const KnowledgeSet& b) { return closure(a) == closure(b); }

bool k_subset(const KnowledgeSet& a, const KnowledgeSet& b) {
  return closure_subset(closure(a), closure(b));
}

bool step_valid(const KnowledgeSet& k1, const KnowledgeSet& k2, Edge label) {
  if (k1.n != k2.n) throw std::invalid_argument("knowledge spaces differ");
  KnowledgeClosure c1 = closure(k1.with_edge(label));
  KnowledgeClosure c2 = closure(k2.with_edge(label));
  return closure_subset(closure(k2), c1) && closure_subset(closure(k1), c2);
}

namespace {

struct PairTable {
  int n = 0;
  std::vector<Edge> pairs;  // bit index -> edge
  std::vector<int> bit_of;  // from * n + to -> bit index (-1 for self pairs)
  int st_bit = -1;

  static PairTable make(int n) {
    PairTable t;
    t.n = n;
    t.bit_of.assign(n * n, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        t.bit_of[a * n + b] = static_cast<int>(t.pairs.size());
        t.pairs.push_back({a, b});
      }
    t.st_bit = t.bit_of[kS * n + kT];
    return t;
  }

  int bits() const { return static_cast<int>(pairs.size()); }
};

// Applies every single-move neighbor of `state` to `fn`. The toggle move is
// restricted to `label_bit`.
template <typename Fn>
void for_each_op_neighbor(const PairTable& t, uint32_t state, int label_bit, Fn&& fn) {
  const int n = t.n;
  fn(state ^ (1u << label_bit));  // move 1

  uint32_t row[32] = {};  // out-neighbor mask per vertex
  for (uint32_t f = state; f;) {
    int bit = std::countr_zero(f);
    f &= f - 1;
    row[t.pairs[bit].from] |= 1u << t.pairs[bit].to;
  }
  for (int a = 0; a < n; ++a) {  // move 2: toggle a->c with a->b->c present
    uint32_t two = 0;
    for (uint32_t f = row[a]; f;) {
      int b = std::countr_zero(f);
      f &= f - 1;
      two |= row[b];
    }
    for (uint32_t f = two & ~(1u << a); f;) {
      int cvx = std::countr_zero(f);
      f &= f - 1;
      fn(state ^ (1u << t.bit_of[a * n + cvx]));
    }
  }
  if ((state >> t.st_bit) & 1u) {  // move 3
    for (int b = 0; b < t.bits(); ++b)
      if (b != t.st_bit) fn(state ^ (1u << b));
  }
}

uint32_t state_of(const PairTable& t, const KnowledgeSet& k) {
  uint32_t s = 0;
  for (const Edge& e : k.edges) s |= 1u << t.bit_of[e.from * t.n + e.to];
  return s;
}

}  // namespace

OpsReach ops_reachable(const KnowledgeSet& k1, const KnowledgeSet& k2, Edge label,
                       uint64_t budget) {
  if (k1.n != k2.n) throw std::invalid_argument("knowledge spaces differ");
  const int n = k1.n;
  if (n * (n - 1) > 30) throw std::invalid_argument("ops_reachable needs n(n-1) <= 30");
  PairTable t = PairTable::make(n);
  const int label_bit = t.bit_of[label.from * n + label.to];
  if (label_bit < 0) throw std::invalid_argument("bad label");

  const uint32_t start = state_of(t, k1);
  const uint32_t goal = state_of(t, k2);
  if (start == goal) return OpsReach::kReachable;

  std::unordered_set<uint32_t> visited{start};
  std::vector<uint32_t> frontier{start};
  uint64_t seen = 1;
  bool found = false, clipped = false;
  while (!frontier.empty() && !found) {
    std::vector<uint32_t> next;
    for (uint32_t st : frontier) {
      for_each_op_neighbor(t, st, label_bit, [&](uint32_t nb) {
        if (found || clipped || !visited.insert(nb).second) return;
        if (nb == goal) {
          found = true;
          return;
        }
        if (++seen >= budget) {
          clipped = true;
          return;
        }
        next.push_back(nb);
      });
      if (found || clipped) break;
    }
    frontier = std::move(next);
  }
  if (found) return OpsReach::kReachable;
  if (clipped) return OpsReach::kBudgetExhausted;
  return OpsReach::kUnreachable;
}

std::vector<int32_t> raw_op_components(int n, Edge label) {
  if (n * (n - 1) > 24) throw std::invalid_argument("raw_op_components needs n(n-1) <= 24");
  PairTable t = PairTable::make(n);
  const int label_bit = t.bit_of[label.from * n + label.to];
  if (label_bit < 0) throw std::invalid_argument("bad label");
  const uint32_t states = 1u << t.bits();

  std::vector<int32_t> parent(states);
  for (uint32_t i = 0; i < states; ++i) parent[i] = static_cast<int32_t>(i);
  auto find = [&](int32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (uint32_t st = 0; st < states; ++st) {
    for_each_op_neighbor(t, st, label_bit, [&](uint32_t nb) {
      int32_t a = find(static_cast<int32_t>(st)), b = find(static_cast<int32_t>(nb));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    });
  }
  for (uint32_t i = 0; i < states; ++i) parent[i] = find(static_cast<int32_t>(i));
  return parent;
}

uint32_t raw_edge_bits(const KnowledgeSet& k) {
  if (k.n * (k.n - 1) > 24) throw std::invalid_argument("raw_edge_bits needs n(n-1) <= 24");
  return state_of(PairTable::make(k.n), k);
}

KnowledgeSet build_kv(const VertexSpace& space, uint32_t interior_mask) {
  if (space.interior() > 31) throw std::invalid_argument("build_kv needs interior <= 31");
  if (space.interior() < 32 && (interior_mask >> space.interior()) != 0)
    throw std::invalid_argument("interior mask has bits outside the space");
  std::vector<Edge> edges;
  for (uint32_t f = interior_mask; f;) {
    int i = std::countr_zero(f);
    f &= f - 1;
    edges.push_back({kS, space.interior_vertex(i)});
  }
  return KnowledgeSet::make(space, std::move(edges));
}

std::vector<Edge> standard_labels(const VertexSpace& space, bool include_degenerate) {
  std::vector<Edge> out;
  for (int a = 0; a < space.n; ++a)
    for (int b = 0; b < space.n; ++b) {
      if (a == b) continue;
      if (!include_degenerate && (b == kS || a == kT)) continue;
      out.push_back({a, b});
    }
  return out;
}

}  // namespace swnet
