#pragma once

#include <vector>

#include "cubicycle/graph.hpp"

namespace cubicycle {

struct EdgeCut {
  std::vector<Edge> edges;
  /// side_a holds the smallest vertex.
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;

  bool operator==(const EdgeCut&) const = default;
};

/// True iff removing fewer than k vertices never disconnects g.
/// Exhaustive over separators, k in {1..4}; requires g.order() > k.
bool is_k_connected(const Graph& g, int k);

/// Minimal disconnecting edge sets (bonds) of size 1..max_size, sorted by
/// edge list. A disconnected graph yields the single empty cut.
std::vector<EdgeCut> enumerate_small_edge_cuts(const Graph& g, int max_size = 3);

/// 3-connected, and for every edge set S with |S| <= 3 whose removal
/// disconnects g, some component of g - S is a tree. Throws NotCubic.
bool is_cyclically_4ec(const Graph& g);

/// Alternative characterisation for cubic graphs: 3-connected and every
/// 3-edge bond is the star of a vertex.
bool all_three_cuts_trivial(const Graph& g);

}  // namespace cubicycle
