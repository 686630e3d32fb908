#include "cubicycle/line_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubicycle/error.hpp"

namespace cubicycle {

Vertex LineGraphMap::edge_to_vertex(Edge e) const {
  const auto& nb = base.neighbors(e.u);
  auto it = std::lower_bound(nb.begin(), nb.end(), e.v);
  if (it == nb.end() || *it != e.v) throw std::invalid_argument("not an edge of the base graph");
  return edge_index[e.u][static_cast<std::size_t>(it - nb.begin())];
}

Vertex LineGraphMap::shared_endpoint(Vertex a, Vertex b) const {
  const Edge ea = vertex_to_edge.at(a), eb = vertex_to_edge.at(b);
  if (a != b) {
    if (eb.has(ea.u)) return ea.u;
    if (eb.has(ea.v)) return ea.v;
  }
  throw std::invalid_argument("line-graph vertices do not share an endpoint");
}

LineGraph line_graph(const Graph& y, bool want_triangles) {
  if (want_triangles && !is_cubic(y)) throw NotCubic("line graph triangle partition needs a cubic graph");
  LineGraph out;
  auto& map = out.map;
  map.base = y;
  map.vertex_to_edge = y.edges();
  map.edge_index.resize(static_cast<std::size_t>(y.order()));
  for (Vertex u = 0; u < y.order(); ++u) map.edge_index[u].assign(y.neighbors(u).size(), -1);
  for (std::size_t i = 0; i < map.vertex_to_edge.size(); ++i) {
    const Edge e = map.vertex_to_edge[i];
    auto slot = [&](Vertex a, Vertex b) {
      const auto& nb = y.neighbors(a);
      return static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), b) - nb.begin());
    };
    map.edge_index[e.u][slot(e.u, e.v)] = static_cast<Vertex>(i);
    map.edge_index[e.v][slot(e.v, e.u)] = static_cast<Vertex>(i);
  }

  out.graph = Graph(static_cast<int>(map.vertex_to_edge.size()));
  for (Vertex u = 0; u < y.order(); ++u) {
    const auto& inc = map.edge_index[u];
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) out.graph.add_edge(inc[i], inc[j]);
  }

  if (want_triangles) {
    map.has_triangles = true;
    map.triangles.reserve(static_cast<std::size_t>(y.order()));
    for (Vertex u = 0; u < y.order(); ++u) {
      std::array<Vertex, 3> t{map.edge_index[u][0], map.edge_index[u][1], map.edge_index[u][2]};
      std::sort(t.begin(), t.end());
      map.triangles.push_back(t);
    }
  }
  return out;
}

}  // namespace cubicycle
