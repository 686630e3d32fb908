#pragma once

#include <array>
#include <vector>

#include "cubicycle/graph.hpp"

namespace cubicycle {

/// Correspondence between E(Y) and V(L(Y)).
///
/// Vertex i of L(Y) is the i-th edge of Y in lexicographic order. For cubic Y
/// the three edges at each vertex y form the triangle `triangles[y]` of L(Y);
/// these triangles partition E(L(Y)).
struct LineGraphMap {
  std::vector<Edge> vertex_to_edge;
  /// `edge_index[u]` parallels `base.neighbors(u)`.
  std::vector<std::vector<Vertex>> edge_index;
  std::vector<std::array<Vertex, 3>> triangles;
  bool has_triangles = false;

  Vertex edge_to_vertex(Edge e) const;
  /// Endpoint shared by the Y-edges behind two adjacent L(Y) vertices.
  Vertex shared_endpoint(Vertex a, Vertex b) const;
  /// Index of the triangle holding the L(Y)-edge {a, b}.
  Vertex triangle_of(Vertex a, Vertex b) const { return shared_endpoint(a, b); }

  Graph base;
};

struct LineGraph {
  Graph graph;
  LineGraphMap map;
};

/// Builds L(y). With `want_triangles` the input must be cubic (throws NotCubic).
LineGraph line_graph(const Graph& y, bool want_triangles = true);

}  // namespace cubicycle
