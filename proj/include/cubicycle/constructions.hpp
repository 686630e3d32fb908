#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "cubicycle/graph.hpp"
#include "cubicycle/line_graph.hpp"

namespace cubicycle {

// ---------------------------------------------------------------------------
// Acyclic spanning subdigraph
// ---------------------------------------------------------------------------

/// Spanning acyclic subdigraph D' of a loop-free digraph D with
/// deg+_{D'}(v) + deg-_{D'}(v) >= deg+_D(v) at every vertex.
///
/// Peels vertices one at a time: take the smallest-index vertex v of the
/// current digraph with out-degree <= in-degree, keep every arc that enters v
/// from a vertex still present, and delete v. Kept arcs always point from a
/// later-peeled vertex to an earlier one, so D' is acyclic. Arcs are returned
/// in their original order, parallel copies included. Throws LoopPresent.
Digraph acyclic_spanning_subdigraph(const Digraph& d);

/// Kahn's algorithm.
bool is_acyclic(const Digraph& d);

/// Both postconditions of acyclic_spanning_subdigraph, including that `sub`
/// uses only arcs of `d` (as a multiset).
bool check_acyclic_subdigraph(const Digraph& d, const Digraph& sub);

// ---------------------------------------------------------------------------
// Facial triangles of L(Y) relative to a Hamilton cycle
// ---------------------------------------------------------------------------

struct TriangleClassification {
  /// classes[t] = number of edges of triangle t on the Hamilton cycle.
  std::vector<int> classes;
  /// centres[t] for 2-triangles, -1 otherwise.
  std::vector<Vertex> centres;
  int tau0 = 0, tau1 = 0, tau2 = 0;

  /// tau0+tau1+tau2 = 2n/3, n = 2tau2+tau1, tau2 = 3tau0+tau1, 3tau2 >= n.
  bool identities_hold(int n) const;
  std::vector<int> two_triangles() const;
};

/// Throws NotHamiltonian unless `c` is a Hamilton cycle of `lg.graph`.
TriangleClassification classify_triangles(const LineGraph& lg, const Cycle& c);

/// Drops the centre of every chosen 2-triangle; the triangle's third edge
/// closes the gap. Throws NotTwoTriangle.
Cycle shorten_by_centers(const LineGraph& lg, const Cycle& c, const TriangleClassification& cls,
                         std::span<const int> chosen);

// ---------------------------------------------------------------------------
// Lifting cycles of Y into L(Y)
// ---------------------------------------------------------------------------

/// The edges of `c_h`, in cyclic order, as a cycle of L(Y).
Cycle lift_cycle(const LineGraph& lg, const Cycle& c_h);

/// s_e for every edge of a lifted cycle: position i covers the L(Y)-edge
/// (c_g[i], c_g[i+1]) and holds the apex of the facial triangle through it.
struct SMap {
  std::vector<Vertex> apex;
  /// Y-vertex whose triangle contains position i.
  std::vector<Vertex> base_vertex;
};

/// Throws UniquenessViolation if an apex lies on c_g.
SMap compute_s_map(const LineGraph& lg, const Cycle& c_g);

/// Positions of c_g with pairwise distinct apexes, one per distinct apex.
/// Among positions sharing an apex, the earliest in the cyclic order starting
/// at the minimum vertex of c_g wins.
struct LambdaSet {
  std::vector<int> positions;
};

LambdaSet maximal_lambda(const SMap& smap, const Cycle& c_g);

/// Replaces edge i of c_g by the path through its apex for each chosen
/// position. Throws CollisionDetected if an apex repeats or lies on c_g.
Cycle extend_by_lambda(const SMap& smap, const Cycle& c_g, std::span<const int> positions);

/// Edges of Y joining two vertices of c_h that are not on c_h.
std::vector<Edge> chords(const Graph& y, const Cycle& c_h);

}  // namespace cubicycle
