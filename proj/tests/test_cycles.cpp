#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cubicycle/cycles.hpp"
#include "cubicycle/error.hpp"
#include "cubicycle/fixtures.hpp"
#include "cubicycle/line_graph.hpp"
#include "oracles.hpp"

using namespace cubicycle;

namespace {
std::set<int> lengths_of(const CycleSpectrum& s) {
  const auto v = s.lengths();
  return {v.begin(), v.end()};
}
}  // namespace

TEST_CASE("spectra of small named graphs") {
  CHECK(lengths_of(cycle_spectrum(fixtures::cube().graph)) == std::set<int>{4, 6, 8});
  CHECK(lengths_of(cycle_spectrum(fixtures::k4().graph)) == std::set<int>{3, 4});
  CHECK(lengths_of(cycle_spectrum(fixtures::petersen())) == std::set<int>{5, 6, 8, 9});
  CHECK(lengths_of(cycle_spectrum(fixtures::path_graph(5))).empty());
  const Graph oct = line_graph(fixtures::k4().graph).graph;
  CHECK(lengths_of(cycle_spectrum(oct)) == std::set<int>{3, 4, 5, 6});
  CHECK(lengths_of(cycle_spectrum(oct, 0)) == std::set<int>{3, 4, 5});
  const Graph cubo = line_graph(fixtures::cube().graph).graph;
  std::set<int> all;
  for (int l = 3; l <= 12; ++l) all.insert(l);
  CHECK(lengths_of(cycle_spectrum(cubo)) == all);
}

TEST_CASE("every reported witness is a valid cycle of its length") {
  const Graph g = line_graph(fixtures::cube().graph).graph;
  for (Vertex v = 0; v < g.order(); ++v) {
    const CycleSpectrum s = cycle_spectrum(g, v);
    for (const auto& [l, c] : s.witnesses) {
      CHECK(c.length() == l);
      CHECK(is_valid_cycle(g, c, v));
      CHECK(canonical(c) == c);
    }
  }
}

TEST_CASE("spectrum matches the subset oracle on random graphs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 6;
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const std::optional<Vertex> forbid = trial % 3 == 0 ? std::optional<Vertex>(trial % n) : std::nullopt;
    CHECK(lengths_of(cycle_spectrum(g, forbid)) == oracle::spectrum(g, forbid));
  }
}

TEST_CASE("parallel spectrum equals the serial reference") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_graph(10, 0.4, rng);
    Budget a, b;
    CHECK(cycle_spectrum(g, std::nullopt, a).witnesses == cycle_spectrum_serial(g, std::nullopt, b).witnesses);
  }
}

TEST_CASE("for_each_cycle counts each cycle once") {
  Budget budget;
  int count = 0;
  for_each_cycle(fixtures::complete_graph(5), 5, std::nullopt, [&](const Cycle&) { return ++count, false; }, budget);
  CHECK(count == 12);  // 4!/2
  count = 0;
  for_each_cycle(fixtures::cube().graph, 4, std::nullopt, [&](const Cycle&) { return ++count, false; }, budget);
  CHECK(count == 6);
  count = 0;
  for_each_cycle(fixtures::cube().graph, 8, std::nullopt, [&](const Cycle&) { return ++count, false; }, budget);
  CHECK(count == 6);
}

TEST_CASE("circumference") {
  CHECK(circumference(fixtures::cube().graph) == 8);
  CHECK(circumference(fixtures::petersen()) == 9);
  CHECK_THROWS_AS(circumference(fixtures::path_graph(4)), Acyclic);
  const Graph q3 = fixtures::cube().graph;
  const std::vector<Vertex> gone{0, 1};
  CHECK(circumference(delete_vertices(q3, gone).graph) == 6);
}

TEST_CASE("budget exhaustion is reported") {
  Budget tiny(10);
  CHECK_THROWS_AS(cycle_spectrum(fixtures::dodecahedron().graph, std::nullopt, tiny), BudgetExceeded);
}

TEST_CASE("bridges and attachment conditions") {
  const auto k4 = fixtures::k4();
  const Cycle tri{{0, 1, 2}};
  const BridgeSummary b = bridges_of(k4.graph, tri);
  REQUIRE(b.components.size() == 1);
  CHECK(b.attachments[0].size() == 3);
  const auto faces = k4.embedding.faces();
  for (const Face& f : faces) {
    const bool is_tri = f.contains_vertex(0) && f.contains_vertex(1) && f.contains_vertex(2);
    CHECK(satisfies_three_edge_conditions(k4.graph, tri, f) == is_tri);
  }
}

TEST_CASE("three edges of a face") {
  const auto k4 = fixtures::k4();
  Budget budget;
  for (const Face& f : k4.embedding.faces()) {
    const auto v = f.vertices();
    const Edge t(v[0], v[1]), y(v[1], v[2]), s(v[2], v[0]);
    const Cycle c = tel_witness(k4.graph, k4.embedding, f, t, y, s, budget);
    CHECK(c.length() == 3);
    CHECK(satisfies_three_edge_conditions(k4.graph, c, f));
  }
  const Graph c5 = fixtures::cycle_graph(5);
  const Embedding e5 = compute_embedding(c5);
  const Face f = e5.faces().front();
  const Cycle c = tel_witness(c5, e5, f, Edge(0, 1), Edge(2, 3), Edge(3, 4), budget);
  CHECK(c.length() == 5);
  const Face k4_face = k4.embedding.faces().front();
  const auto fv = k4_face.vertices();
  Vertex off = 0;
  while (k4_face.contains_vertex(off)) ++off;
  CHECK_THROWS_AS(tel_witness(k4.graph, k4.embedding, k4_face, Edge(fv[0], fv[1]), Edge(fv[1], fv[2]),
                              Edge(fv[0], off), budget),
                  std::invalid_argument);
}

TEST_CASE("Hamilton cycle through two edges avoiding a third") {
  const LineGraph lg = line_graph(fixtures::cube().graph);
  Budget budget;
  const auto& t = lg.map.triangles[0];
  const auto h = hamilton_cycle_through(lg.graph, Edge(t[0], t[1]), Edge(t[0], t[2]), Edge(t[1], t[2]), budget);
  REQUIRE(h.has_value());
  CHECK(h->length() == 12);
  CHECK(is_valid_cycle(lg.graph, *h));
  CHECK(h->contains_edge(Edge(t[0], t[1])));
  CHECK(h->contains_edge(Edge(t[0], t[2])));
  CHECK_FALSE(h->contains_edge(Edge(t[1], t[2])));
  const Graph p = fixtures::path_graph(3);
  CHECK_FALSE(hamilton_cycle_through(p, Edge(0, 1), Edge(1, 2), Edge(0, 2), budget).has_value());
}

TEST_CASE("single-length searches") {
  const Graph oct = line_graph(fixtures::k4().graph).graph;
  const auto c = find_cycle_of_length(oct, 4);
  REQUIRE(c.has_value());
  CHECK(is_valid_cycle(oct, *c));
  const Graph dl = line_graph(fixtures::dodecahedron().graph).graph;
  CHECK_FALSE(find_cycle_of_length(dl, 4).has_value());
  // a triangle with a pendant path: forbidding a triangle vertex leaves no 3-cycle
  Graph g(5);
  for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}}) g.add_edge(a, b);
  CHECK(find_cycle_of_length(g, 3).has_value());
  CHECK_FALSE(find_cycle_of_length(g, 3, 1).has_value());
}

TEST_CASE("three edges of a cube face") {
  const auto q3 = fixtures::cube();
  Budget budget;
  for (const Face& f : q3.embedding.faces()) {
    const auto v = f.vertices();
    for (int skip = 0; skip < 4; ++skip) {
      std::vector<Edge> es;
      for (int i = 0; i < 4; ++i)
        if (i != skip) es.emplace_back(v[i], v[(i + 1) % 4]);
      const Cycle c = tel_witness(q3.graph, q3.embedding, f, es[0], es[1], es[2], budget);
      CHECK(satisfies_three_edge_conditions(q3.graph, c, f));
      for (const Edge& e : es) CHECK(c.contains_edge(e));
    }
  }
}

TEST_CASE("Hamilton cycles through a triangle corner") {
  Budget budget;
  const Graph c4 = fixtures::cycle_graph(4);
  CHECK_FALSE(hamilton_cycle_through(c4, Edge(0, 1), Edge(1, 2), Edge(2, 3), budget).has_value());
  for (const auto& y : {fixtures::k4().graph, fixtures::cube().graph}) {
    const LineGraph lg = line_graph(y);
    for (Vertex v = 0; v < lg.graph.order(); ++v) {
      const auto& t = lg.map.triangles[lg.map.vertex_to_edge[v].u];
      std::vector<Vertex> o;
      for (Vertex x : t)
        if (x != v) o.push_back(x);
      const auto h = hamilton_cycle_through(lg.graph, Edge(v, o[0]), Edge(v, o[1]), Edge(o[0], o[1]), budget);
      REQUIRE(h.has_value());
      CHECK(h->length() == lg.graph.order());
      CHECK_FALSE(h->contains_edge(Edge(o[0], o[1])));
    }
  }
}
