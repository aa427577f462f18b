#include "swnet/transitions.hpp"

#include <algorithm>
#include <stdexcept>

#include "swnet/errors.hpp"

namespace swnet {

namespace {

void check_args(const CutFunction& f, const CutFunction& g, Edge label, const VertexSpace& space) {
  if (!space.contains(label.from) || !space.contains(label.to) || label.from == label.to)
    throw std::invalid_argument("bad label");
  if (f.interior_count() != space.interior() || g.interior_count() != space.interior())
    throw std::invalid_argument("functions live on a different space");
}

}  // namespace

bool can_transition(const CutFunction& f, const CutFunction& g, Edge label,
                    const VertexSpace& space) {
  check_args(f, g, label, space);
  if (label.to == kS || label.from == kT) return f == g;
  if (label.from == kS && label.to == kT) return true;

  CutFunction d = g - f;
  if (label.from == kS || label.to == kT) {
    // single-vertex shapes: pair up V and V + v
    int v = label.from == kS ? label.to : label.from;
    uint32_t bit = 1u << VertexSpace::interior_index(v);
    bool flip = label.to == kT;  // v->t wants d(V + v) == -d(V)
    for (const auto& [mask, c] : d.terms()) {
      Dyadic partner = d.coeff(mask ^ bit);
      if (partner != (flip ? -c : c)) return false;
    }
    return true;
  }

  // interior v->w: quadruples over V, V+v, V+w, V+v+w
  uint32_t bv = 1u << VertexSpace::interior_index(label.from);
  uint32_t bw = 1u << VertexSpace::interior_index(label.to);
  std::vector<uint32_t> bases;
  bases.reserve(d.terms().size());
  for (const auto& [mask, c] : d.terms()) bases.push_back(mask & ~(bv | bw));
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  for (uint32_t base : bases) {
    Dyadic x = d.coeff(base);
    if (d.coeff(base | bv) != -x) return false;
    if (d.coeff(base | bw) != x) return false;
    if (d.coeff(base | bv | bw) != -x) return false;
  }
  return true;
}

bool can_transition_bruteforce(const CutFunction& f, const CutFunction& g, Edge label,
                               const VertexSpace& space) {
  check_args(f, g, label, space);
  const int ni = space.interior();
  if (ni > 24) throw limit_error("brute-force transition check needs interior <= 24");
  for (uint32_t m = 0; m < (1u << ni); ++m) {
    Cut c{m, ni};
    if (crosses(label, c)) continue;
    if (f.evaluate(c) != g.evaluate(c)) return false;
  }
  return true;
}

FnReachResult reach(const std::vector<CutFunction>& h_set, const std::vector<Edge>& labels,
                    int from, int to, const VertexSpace& space) {
  const int n = static_cast<int>(h_set.size());
  if (from < 0 || from >= n || to < 0 || to >= n)
    throw std::invalid_argument("reach endpoints out of range");

  std::vector<int> prev(n, -1);
  std::vector<Edge> via(n, Edge{});
  std::vector<char> seen(n, 0);
  std::vector<int> frontier{from};
  seen[from] = 1;
  bool found = from == to;
  while (!frontier.empty() && !found) {
    std::vector<int> next;
    for (int i : frontier) {
      for (int j = 0; j < n && !found; ++j) {
        if (seen[j]) continue;
        for (const Edge& label : labels) {
          if (!can_transition(h_set[i], h_set[j], label, space)) continue;
          seen[j] = 1;
          prev[j] = i;
          via[j] = label;
          next.push_back(j);
          if (j == to) found = true;
          break;
        }
      }
      if (found) break;
    }
    frontier = std::move(next);
  }

  FnReachResult r;
  r.reachable = found;
  if (found) {
    std::vector<std::pair<int, Edge>> rev;
    for (int v = to; v != from; v = prev[v]) rev.push_back({v, via[v]});
    std::reverse(rev.begin(), rev.end());
    r.steps = std::move(rev);
  }
  return r;
}

}  // namespace swnet
