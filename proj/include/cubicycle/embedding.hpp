#pragma once

#include <vector>

#include "cubicycle/graph.hpp"

namespace cubicycle {

/// Directed copy of an edge.
struct Dart {
  Vertex tail = 0;
  Vertex head = 0;
  auto operator<=>(const Dart&) const = default;
};

/// A boundary walk. `darts[i].head == darts[i+1].tail`, cyclically.
struct Face {
  std::vector<Dart> darts;

  int length() const { return static_cast<int>(darts.size()); }
  /// Tails of the darts in walk order.
  std::vector<Vertex> vertices() const;
  bool contains_vertex(Vertex v) const;
  bool contains_edge(Edge e) const;
};

/// Rotation system: for each vertex the cyclic order of its neighbours.
///
/// Faces are traced by the rule "after dart (u, v), take (v, w) where w is the
/// successor of u in the rotation at v". The orientation convention
/// (clockwise or counterclockwise) only changes the traversal direction of
/// every face, not the face set.
class Embedding {
 public:
  Embedding() = default;
  /// Throws std::invalid_argument if a rotation does not list each neighbour
  /// of its vertex exactly once.
  Embedding(const Graph& g, std::vector<std::vector<Vertex>> rotation);

  const std::vector<Vertex>& rotation(Vertex v) const { return rotation_[v]; }
  int order() const { return static_cast<int>(rotation_.size()); }

  /// Neighbour following `from` in the rotation at `at`.
  Vertex successor(Vertex at, Vertex from) const;

  /// Dart orbits in a deterministic order (by smallest unvisited dart).
  /// An edgeless graph has no darts, so this is empty for it.
  std::vector<Face> faces() const;
  int face_count() const;

  /// V - E + F == 2, with the usual single face for an edgeless graph.
  bool satisfies_euler(const Graph& g) const;

  /// The embedding restricted to an induced subgraph (deleting vertices from
  /// a plane graph keeps it plane).
  Embedding restrict_to(const InducedSubgraph& sub) const;

 private:
  std::vector<std::vector<Vertex>> rotation_;
};

/// Planar embedding of a connected graph. Throws NonPlanar.
Embedding compute_embedding(const Graph& g);

bool is_planar(const Graph& g);

/// Every plane embedding of a connected graph, one per distinct set of face
/// boundaries (so mirror images collapse). Enumerates all rotation systems;
/// throws std::invalid_argument beyond `max_rotations` of them.
std::vector<Embedding> plane_embeddings(const Graph& g, long long max_rotations = 1'000'000);

/// The face of H that carries every degree-2 vertex. H must have exactly four
/// of them; otherwise, or if no face carries all four, throws NoSuchFace.
/// Ties go to the lexicographically smallest dart sequence.
Face exterior_face_of_H(const Graph& h, const Embedding& e);

}  // namespace cubicycle
