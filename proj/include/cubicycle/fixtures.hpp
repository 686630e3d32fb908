#pragma once

#include <string>
#include <vector>

#include "cubicycle/codec.hpp"

namespace cubicycle {

struct NamedGraph {
  std::string name;
  EmbeddedGraph graph;
};

namespace fixtures {

/// Polyhedral embeddings, each read off a straight-line plane drawing.
EmbeddedGraph k4();
EmbeddedGraph cube();
EmbeddedGraph dodecahedron();

/// K4, Q3 and the dodecahedron, in that order.
std::vector<NamedGraph> builtin();

// Small graphs used in tests and diagnostics (no embedding attached).
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph petersen();
Graph triangular_prism();

}  // namespace fixtures
}  // namespace cubicycle
