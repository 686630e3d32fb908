#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubicycle/error.hpp"
#include "cubicycle/fixtures.hpp"
#include "cubicycle/line_graph.hpp"

#include <map>

using namespace cubicycle;

TEST_CASE("line graph of K4 is the octahedron") {
  const LineGraph lg = line_graph(fixtures::k4().graph);
  CHECK(lg.graph.order() == 6);
  CHECK(lg.graph.size() == 12);
  for (Vertex v = 0; v < 6; ++v) CHECK(lg.graph.degree(v) == 4);
  CHECK(lg.map.triangles.size() == 4);
}

TEST_CASE("line graph of Q3 is the cuboctahedron") {
  const LineGraph lg = line_graph(fixtures::cube().graph);
  CHECK(lg.graph.order() == 12);
  CHECK(lg.graph.size() == 24);
  int triangles = 0;
  for (Vertex a = 0; a < 12; ++a)
    for (Vertex b : lg.graph.neighbors(a))
      for (Vertex c : lg.graph.neighbors(b))
        if (a < b && b < c && lg.graph.adjacent(a, c)) ++triangles;
  CHECK(triangles == 8);
  CHECK(lg.map.triangles.size() == 8);
}

TEST_CASE("vertex map and triangles are consistent") {
  const Graph y = fixtures::dodecahedron().graph;
  const LineGraph lg = line_graph(y);
  for (Vertex x = 0; x < lg.graph.order(); ++x) CHECK(lg.map.edge_to_vertex(lg.map.vertex_to_edge[x]) == x);
  for (Vertex yv = 0; yv < y.order(); ++yv) {
    const auto& t = lg.map.triangles[yv];
    CHECK(lg.graph.adjacent(t[0], t[1]));
    CHECK(lg.graph.adjacent(t[1], t[2]));
    CHECK(lg.graph.adjacent(t[0], t[2]));
    for (Vertex x : t) CHECK(lg.map.vertex_to_edge[x].has(yv));
    CHECK(lg.map.shared_endpoint(t[0], t[2]) == yv);
    CHECK(lg.map.triangle_of(t[1], t[2]) == yv);
  }
  for (Vertex u = 0; u < y.order(); ++u)
    for (std::size_t i = 0; i < y.neighbors(u).size(); ++i)
      CHECK(lg.map.vertex_to_edge[lg.map.edge_index[u][i]] == Edge(u, y.neighbors(u)[i]));
}

TEST_CASE("non-cubic input") {
  CHECK_THROWS_AS(line_graph(fixtures::cycle_graph(5)), NotCubic);
  const LineGraph lg = line_graph(fixtures::cycle_graph(5), false);
  CHECK(lg.graph.order() == 5);
  CHECK(lg.graph.size() == 5);
  CHECK_FALSE(lg.map.has_triangles);
}

TEST_CASE("line graph of a single edge") {
  const LineGraph lg = line_graph(fixtures::path_graph(2), false);
  CHECK(lg.graph.order() == 1);
  CHECK(lg.graph.size() == 0);
}

TEST_CASE("facial triangles partition the edges") {
  for (const auto& y : {fixtures::k4().graph, fixtures::cube().graph, fixtures::dodecahedron().graph}) {
    const LineGraph lg = line_graph(y);
    std::map<Edge, int> cover;
    for (const auto& t : lg.map.triangles)
      for (int i = 0; i < 3; ++i) ++cover[Edge(t[i], t[(i + 1) % 3])];
    CHECK(static_cast<int>(cover.size()) == lg.graph.size());
    for (const auto& [e, k] : cover) {
      CHECK(k == 1);
      CHECK(lg.graph.adjacent(e.u, e.v));
    }
  }
}
