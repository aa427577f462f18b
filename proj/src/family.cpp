#include "swnet/family.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "swnet/bigmath.hpp"
#include "swnet/errors.hpp"

namespace swnet {

InputGraph build_augmented_input(const InputGraph& base, const VertexSpace& space,
                                 const std::vector<int>& v0, uint32_t left_mask,
                                 uint32_t right_mask) {
  const int k = base.space.interior();
  if (space.interior() > 31) throw std::invalid_argument("target space needs interior <= 31");
  if (static_cast<int>(v0.size()) != k)
    throw std::invalid_argument("v0 size must match base interior count");

  uint32_t v0_mask = 0;
  for (int v : v0) {
    if (!space.is_interior(v)) throw std::invalid_argument("v0 vertex not interior");
    uint32_t bit = 1u << VertexSpace::interior_index(v);
    if (v0_mask & bit) throw std::invalid_argument("v0 vertices must be distinct");
    v0_mask |= bit;
  }
  const uint32_t full = space.interior() == 0 ? 0u : (~0u >> (32 - space.interior()));
  if (left_mask & right_mask) throw std::invalid_argument("left/right overlap");
  if ((left_mask | right_mask) & v0_mask)
    throw std::invalid_argument("left/right must avoid v0");
  if ((v0_mask | left_mask | right_mask) != full)
    throw std::invalid_argument("v0, left, right must cover the interior");

  auto map_vertex = [&](int v) {
    if (v == kS || v == kT) return v;
    return v0[VertexSpace::interior_index(v)];
  };

  std::vector<Edge> edges;
  for (int i = 0; i < space.interior(); ++i) {
    if ((left_mask >> i) & 1u) edges.push_back({kS, space.interior_vertex(i)});
    if ((right_mask >> i) & 1u) edges.push_back({space.interior_vertex(i), kT});
  }
  for (const Edge& e : base.edges) edges.push_back({map_vertex(e.from), map_vertex(e.to)});
  return InputGraph::make(space, std::move(edges));
}

InputFamily enumerate_family(const InputGraph& base, const VertexSpace& space, bool allow_left,
                             bool allow_right, uint64_t limit, std::string name) {
  const int k = base.space.interior();
  const int ni = space.interior();
  if (ni > 31) throw std::invalid_argument("family space needs interior <= 31");
  if (k > ni) throw std::invalid_argument("base has more interior vertices than the target space");
  const int c = ni - k;  // leftover vertices
  if (!allow_left && !allow_right && c > 0)
    throw std::invalid_argument(
        "with both sides disallowed the base must use the whole interior");

  mpz_class projected = factorial(ni) / factorial(c);
  if (allow_left && allow_right) projected <<= c;
  if (projected > limit)
    throw limit_error("family would have " + projected.get_str() + " members, over the limit of " +
                      std::to_string(limit));

  InputFamily fam{std::move(name), base, space, allow_left, allow_right, {}};
  std::map<std::vector<Edge>, size_t> seen;

  // Ordered k-tuples of interior indices, lexicographic.
  std::vector<int> tuple(k, 0);
  std::vector<char> used(ni, 0);
  const uint32_t splits = (allow_left && allow_right) ? (1u << c) : 1u;

  auto emit = [&]() {
    uint32_t v0_mask = 0;
    std::vector<int> v0(k);
    for (int i = 0; i < k; ++i) {
      v0[i] = space.interior_vertex(tuple[i]);
      v0_mask |= 1u << tuple[i];
    }
    std::vector<int> leftover;
    for (int i = 0; i < ni; ++i)
      if (!((v0_mask >> i) & 1u)) leftover.push_back(i);

    for (uint32_t split = 0; split < splits; ++split) {
      uint32_t left = 0, right = 0;
      for (int j = 0; j < c; ++j) {
        bool to_left = (allow_left && allow_right) ? ((split >> j) & 1u) : allow_left;
        (to_left ? left : right) |= 1u << leftover[j];
      }
      InputGraph g = build_augmented_input(base, space, v0, left, right);
      if (seen.emplace(g.edges, fam.members.size()).second)
        fam.members.push_back(FamilyMember{v0, left, right, std::move(g)});
    }
  };

  // odometer over distinct-index tuples
  if (k == 0) {
    emit();
  } else {
    int pos = 0;
    tuple[0] = -1;
    while (pos >= 0) {
      int next = tuple[pos] + 1;
      if (tuple[pos] >= 0) used[tuple[pos]] = 0;
      while (next < ni && used[next]) ++next;
      if (next >= ni) {
        tuple[pos] = -1;
        --pos;
        continue;
      }
      tuple[pos] = next;
      used[next] = 1;
      if (pos == k - 1) {
        emit();
      } else {
        ++pos;
        tuple[pos] = -1;
      }
    }
  }
  return fam;
}

void write_family(std::ostream& out, const InputFamily& family) {
  out << "FAMILY " << family.name << " N=" << family.space.n << " K=" << family.base.space.interior()
      << "\n";
  for (size_t i = 0; i < family.members.size(); ++i) {
    const InputGraph& g = family.members[i].graph;
    out << "GRAPH " << i << " EDGES ";
    for (size_t j = 0; j < g.edges.size(); ++j) {
      if (j) out << ",";
      out << family.space.edge_name(g.edges[j]);
    }
    out << "\n";
  }
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

}  // namespace

LoadedFamily read_family(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) throw parse_error("empty family file", 1);
  ++lineno;
  auto head = split_ws(line);
  if (head.size() != 4 || head[0] != "FAMILY" || head[2].rfind("N=", 0) != 0 ||
      head[3].rfind("K=", 0) != 0)
    throw parse_error("expected 'FAMILY <name> N=<n> K=<k>'", lineno);
  LoadedFamily fam;
  fam.name = head[1];
  try {
    fam.space = VertexSpace::make(std::stoi(head[2].substr(2)));
    fam.k = std::stoi(head[3].substr(2));
  } catch (const std::exception&) {
    throw parse_error("bad N=/K= value", lineno);
  }
  if (fam.k < 0 || fam.k > fam.space.interior()) throw parse_error("K out of range", lineno);

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto toks = split_ws(line);
    if (toks.size() != 4 || toks[0] != "GRAPH" || toks[2] != "EDGES")
      throw parse_error("expected 'GRAPH <index> EDGES <a>-><b>,...'", lineno);
    size_t expect = fam.graphs.size();
    if (toks[1] != std::to_string(expect))
      throw parse_error("expected graph index " + std::to_string(expect), lineno);
    std::vector<Edge> edges;
    std::string item;
    std::istringstream es(toks[3]);
    while (std::getline(es, item, ',')) {
      try {
        edges.push_back(fam.space.parse_edge(item));
      } catch (const parse_error& e) {
        throw parse_error(e.what(), lineno);
      }
    }
    if (edges.empty()) throw parse_error("graph with no edges", lineno);
    try {
      fam.graphs.push_back(InputGraph::make(fam.space, std::move(edges)));
    } catch (const std::exception& e) {
      throw parse_error(e.what(), lineno);
    }
  }
  return fam;
}

}  // namespace swnet
