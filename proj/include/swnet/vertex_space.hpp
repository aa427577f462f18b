#ifndef SWNET_VERTEX_SPACE_HPP
#define SWNET_VERTEX_SPACE_HPP

#include <compare>
#include <string>
#include <string_view>

namespace swnet {

// Vertex ids: 0 = s, 1 = t, 2+i = i-th interior vertex (named u1, u2, ...).
// The interior ordering used everywhere (cut indexing, chain steps) is id order.
inline constexpr int kS = 0;
inline constexpr int kT = 1;

struct Edge {
  int from = 0;
  int to = 0;
  auto operator<=>(const Edge&) const = default;
};

struct VertexSpace {
  int n = 0;  // total vertex count, including s and t

  static VertexSpace make(int n);

  int interior() const { return n - 2; }
  bool contains(int v) const { return v >= 0 && v < n; }
  bool is_interior(int v) const { return v >= 2 && v < n; }
  int interior_vertex(int index) const { return 2 + index; }
  static int interior_index(int v) { return v - 2; }

  std::string vertex_name(int v) const;
  // Throws parse_error (line 0) on unknown names.
  int parse_vertex(std::string_view name) const;

  std::string edge_name(Edge e) const;           // "a->b"
  Edge parse_edge(std::string_view text) const;  // accepts "a->b"

  bool operator==(const VertexSpace&) const = default;
};

// Upper cap on space size; individual operations impose tighter limits where
// they need interior bitmasks (<= 31 interior) or closures (<= 32 vertices).
inline constexpr int kMaxSpaceVertices = 1 << 20;

}  // namespace swnet

#endif
