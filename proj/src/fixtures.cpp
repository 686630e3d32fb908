#include "cubicycle/fixtures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace cubicycle::fixtures {

namespace {

struct Point {
  double x, y;
};

Point polar(double r, double degrees) {
  const double a = degrees * std::numbers::pi / 180.0;
  return {r * std::cos(a), r * std::sin(a)};
}

// Rotation = neighbours sorted by angle around each vertex in the drawing.
EmbeddedGraph from_drawing(const std::vector<Point>& at, const std::vector<Edge>& edges) {
  Graph g(static_cast<int>(at.size()), edges);
  std::vector<std::vector<Vertex>> rot(at.size());
  for (Vertex v = 0; v < g.order(); ++v) {
    rot[v] = g.neighbors(v);
    auto angle = [&](Vertex w) { return std::atan2(at[w].y - at[v].y, at[w].x - at[v].x); };
    std::sort(rot[v].begin(), rot[v].end(), [&](Vertex a, Vertex b) { return angle(a) < angle(b); });
  }
  Embedding emb(g, std::move(rot));
  return {std::move(g), std::move(emb)};
}

}  // namespace

EmbeddedGraph k4() {
  std::vector<Point> at{polar(1, 90), polar(1, 210), polar(1, 330), {0, 0}};
  return from_drawing(at, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
}

EmbeddedGraph cube() {
  std::vector<Point> at;
  for (int i = 0; i < 4; ++i) at.push_back(polar(2, 45 + 90 * i));
  for (int i = 0; i < 4; ++i) at.push_back(polar(1, 45 + 90 * i));
  std::vector<Edge> edges;
  for (int i = 0; i < 4; ++i) {
    edges.emplace_back(i, (i + 1) % 4);
    edges.emplace_back(4 + i, 4 + (i + 1) % 4);
    edges.emplace_back(i, 4 + i);
  }
  return from_drawing(at, edges);
}

EmbeddedGraph dodecahedron() {
  // Rings from the outside in: outer pentagon o_i, ten-cycle m_0 n_0 m_1 n_1
  // ..., inner pentagon i_i. o_i - m_i, n_i - i_i.
  auto o = [](int i) { return (i % 5 + 5) % 5; };
  auto m = [](int i) { return 5 + (i % 5 + 5) % 5; };
  auto nn = [](int i) { return 10 + (i % 5 + 5) % 5; };
  auto in = [](int i) { return 15 + (i % 5 + 5) % 5; };
  std::vector<Point> at(20);
  for (int i = 0; i < 5; ++i) {
    at[o(i)] = polar(4.0, 90 + 72 * i);
    at[m(i)] = polar(2.6, 90 + 72 * i);
    at[nn(i)] = polar(2.0, 126 + 72 * i);
    at[in(i)] = polar(1.0, 126 + 72 * i);
  }
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(o(i), o(i + 1));
    edges.emplace_back(o(i), m(i));
    edges.emplace_back(m(i), nn(i));
    edges.emplace_back(nn(i), m(i + 1));
    edges.emplace_back(nn(i), in(i));
    edges.emplace_back(in(i), in(i + 1));
  }
  return from_drawing(at, edges);
}

std::vector<NamedGraph> builtin() {
  return {{"K4", k4()}, {"cube", cube()}, {"dodecahedron", dodecahedron()}};
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, 5 + i);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph triangular_prism() {
  Graph g(6);
  for (int i = 0; i < 3; ++i) {
    g.add_edge(i, (i + 1) % 3);
    g.add_edge(3 + i, 3 + (i + 1) % 3);
    g.add_edge(i, 3 + i);
  }
  return g;
}

}  // namespace cubicycle::fixtures
