#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "cubicycle/budget.hpp"
#include "cubicycle/embedding.hpp"
#include "cubicycle/graph.hpp"

namespace cubicycle {

/// Each undirected cycle is reported once, in canonical orientation
/// (see `canonical`). Return true to stop the search.
using CycleVisitor = std::function<bool(const Cycle&)>;

/// Exhaustive enumeration of the l-cycles avoiding `forbid`, in a fixed order:
/// by smallest vertex, then by DFS with neighbours in ascending order.
/// Returns true if the visitor stopped the search.
bool for_each_cycle(const Graph& g, int length, std::optional<Vertex> forbid,
                    const CycleVisitor& visit, Budget& budget);

/// First l-cycle (in enumeration order) accepted by `accept`.
std::optional<Cycle> find_cycle_if(const Graph& g, int length, std::optional<Vertex> forbid,
                                   const std::function<bool(const Cycle&)>& accept, Budget& budget);

/// Exact: returns an l-cycle avoiding `forbid` or nullopt when none exists.
std::optional<Cycle> find_cycle_of_length(const Graph& g, int length,
                                          std::optional<Vertex> forbid, Budget& budget);
std::optional<Cycle> find_cycle_of_length(const Graph& g, int length,
                                          std::optional<Vertex> forbid = std::nullopt);

struct CycleSpectrum {
  std::optional<Vertex> forbid;
  /// length -> first witness found for that length.
  std::map<int, Cycle> witnesses;

  bool present(int l) const { return witnesses.contains(l); }
  std::vector<int> lengths() const;
};

/// One exact search per length 3..n, run concurrently. The budget covers the
/// whole call. Produces the same witnesses as `cycle_spectrum_serial`.
CycleSpectrum cycle_spectrum(const Graph& g, std::optional<Vertex> forbid, Budget& budget);
CycleSpectrum cycle_spectrum(const Graph& g, std::optional<Vertex> forbid = std::nullopt);

/// Serial reference for `cycle_spectrum`.
CycleSpectrum cycle_spectrum_serial(const Graph& g, std::optional<Vertex> forbid, Budget& budget);

/// Longest cycle length. Throws Acyclic for forests.
int circumference(const Graph& g, Budget& budget);
int circumference(const Graph& g);
/// Longest cycle, searched from length n downward.
Cycle longest_cycle(const Graph& g, Budget& budget);

/// Attachment vertices on `c` of each component of g - V(c).
struct BridgeSummary {
  std::vector<std::vector<Vertex>> components;
  std::vector<std::vector<Vertex>> attachments;
};
BridgeSummary bridges_of(const Graph& g, const Cycle& c);

/// Every component of g - V(c) attaches to at most three vertices of c, and
/// those meeting `x` attach to at most two.
bool satisfies_three_edge_conditions(const Graph& g, const Cycle& c, const Face& x);

/// Shortest cycle through t, y and s satisfying both attachment conditions
/// relative to face x, searched by increasing length. Throws TheoremViolation
/// if none exists.
Cycle tel_witness(const Graph& g, const Embedding& emb, const Face& x, Edge t, Edge y, Edge s,
                  Budget& budget);

/// Hamilton cycle of g - avoid that uses e1 and e2 (which share a vertex).
std::optional<Cycle> hamilton_cycle_through(const Graph& g, Edge e1, Edge e2, Edge avoid,
                                            Budget& budget);

}  // namespace cubicycle
