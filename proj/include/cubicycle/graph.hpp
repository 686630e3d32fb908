#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cubicycle {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool has(Vertex x) const { return x == u || x == v; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}
  Graph(int n, std::span<const Edge> edges);

  /// Throws std::invalid_argument on self-loops, duplicates and out-of-range
  /// endpoints.
  void add_edge(Vertex a, Vertex b);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edge_count_; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex a, Vertex b) const;

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  int edge_count_ = 0;
};

/// Loop-free directed multigraph. Parallel arcs are kept as separate entries.
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  auto operator<=>(const Arc&) const = default;
};

struct Digraph {
  int n = 0;
  std::vector<Arc> arcs;

  std::vector<int> out_degrees() const;
  std::vector<int> in_degrees() const;
};

/// A cycle given by its cyclic vertex sequence; length equals vertex count.
struct Cycle {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  /// Edges in traversal order: (v[i], v[i+1 mod l]).
  std::vector<Edge> edges() const;
  bool contains(Vertex v) const;
  bool contains_edge(Edge e) const;

  bool operator==(const Cycle&) const = default;
};

/// Rotates and orients a cycle so it starts at its minimum vertex and the
/// second vertex is the smaller of the two neighbours of that vertex.
Cycle canonical(Cycle c);

/// Checks distinctness, length >= 3, adjacency of consecutive vertices
/// (including closure), and avoidance of `forbid`.
bool is_valid_cycle(const Graph& g, const Cycle& c,
                    std::optional<Vertex> forbid = std::nullopt);

struct InducedSubgraph {
  Graph graph;
  /// old index -> new index, -1 for deleted vertices.
  std::vector<Vertex> old_to_new;
  std::vector<Vertex> new_to_old;
};

InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> removed);

bool is_cubic(const Graph& g);
bool is_connected(const Graph& g);

/// Component label per vertex, labels dense from 0 in order of first vertex.
/// Vertices with `keep[v] == false` get label -1 and are ignored.
std::vector<int> component_labels(const Graph& g, const std::vector<char>& keep);

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

/// Shortest cycle length by BFS from every vertex; kInfiniteGirth for forests.
int girth(const Graph& g);

}  // namespace cubicycle
