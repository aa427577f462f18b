#include "swnet/vertex_space.hpp"

#include <charconv>
#include <stdexcept>

#include "swnet/errors.hpp"

namespace swnet {

VertexSpace VertexSpace::make(int n) {
  if (n < 2 || n > kMaxSpaceVertices)
    throw std::invalid_argument("vertex space needs 2 <= n <= " +
                                std::to_string(kMaxSpaceVertices) + ", got " + std::to_string(n));
  return VertexSpace{n};
}

std::string VertexSpace::vertex_name(int v) const {
  if (!contains(v)) throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
  if (v == kS) return "s";
  if (v == kT) return "t";
  return "u" + std::to_string(v - 1);  // interior index + 1
}

int VertexSpace::parse_vertex(std::string_view name) const {
  if (name == "s") return kS;
  if (name == "t") return kT;
  if (name.size() >= 2 && name[0] == 'u') {
    int idx = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), idx);
    if (ec == std::errc{} && ptr == name.data() + name.size() && idx >= 1 && idx <= interior())
      return 1 + idx;
  }
  throw parse_error("unknown vertex name '" + std::string(name) + "'", 0);
}

std::string VertexSpace::edge_name(Edge e) const {
  return vertex_name(e.from) + "->" + vertex_name(e.to);
}

Edge VertexSpace::parse_edge(std::string_view text) const {
  auto pos = text.find("->");
  if (pos == std::string_view::npos)
    throw parse_error("edge must look like 'a->b', got '" + std::string(text) + "'", 0);
  Edge e{parse_vertex(text.substr(0, pos)), parse_vertex(text.substr(pos + 2))};
  if (e.from == e.to) throw parse_error("self-loop edge '" + std::string(text) + "'", 0);
  return e;
}

}  // namespace swnet
