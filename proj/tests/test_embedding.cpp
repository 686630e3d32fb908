#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cubicycle/embedding.hpp"
#include "cubicycle/error.hpp"
#include "cubicycle/fixtures.hpp"
#include "oracles.hpp"

using namespace cubicycle;

namespace {
std::vector<int> face_lengths(const Embedding& e) {
  std::vector<int> out;
  for (const Face& f : e.faces()) out.push_back(f.length());
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

TEST_CASE("fixture faces") {
  CHECK(face_lengths(fixtures::k4().embedding) == std::vector<int>(4, 3));
  CHECK(face_lengths(fixtures::cube().embedding) == std::vector<int>(6, 4));
  CHECK(face_lengths(fixtures::dodecahedron().embedding) == std::vector<int>(12, 5));
  for (const auto& ng : fixtures::builtin()) CHECK(ng.graph.embedding.satisfies_euler(ng.graph.graph));
}

TEST_CASE("face orbits use every dart once") {
  const auto d = fixtures::dodecahedron();
  std::set<Dart> seen;
  for (const Face& f : d.embedding.faces())
    for (const Dart& x : f.darts) CHECK(seen.insert(x).second);
  CHECK(seen.size() == 60);
}

TEST_CASE("cycle has two faces") {
  const Embedding e = compute_embedding(fixtures::cycle_graph(5));
  CHECK(face_lengths(e) == std::vector<int>{5, 5});
}

TEST_CASE("planarity") {
  CHECK_THROWS_AS(compute_embedding(fixtures::petersen()), NonPlanar);
  CHECK_THROWS_AS(compute_embedding(fixtures::complete_graph(5)), NonPlanar);
  CHECK_FALSE(is_planar(fixtures::petersen()));
  CHECK(is_planar(fixtures::complete_graph(4)));
  CHECK(is_planar(fixtures::triangular_prism()));
}

TEST_CASE("computed embeddings satisfy Euler on random connected planar graphs") {
  std::mt19937_64 rng(3);
  int tested = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = oracle::random_graph(4 + trial % 9, 0.35, rng);
    if (!is_connected(g) || !is_planar(g)) continue;
    ++tested;
    const Embedding e = compute_embedding(g);
    CHECK(e.satisfies_euler(g));
    CHECK(g.order() - g.size() + e.face_count() == 2);
  }
  CHECK(tested > 50);
}

TEST_CASE("rotation mismatches are rejected") {
  const Graph g = fixtures::cycle_graph(3);
  CHECK_THROWS(Embedding(g, {{1, 2}, {0, 2}, {0}}));
}

TEST_CASE("exterior face of Y minus an adjacent pair") {
  for (const auto& [fixture, expected] : {std::pair{fixtures::cube(), 6}, {fixtures::dodecahedron(), 10}}) {
    for (const Edge& e : fixture.graph.edges()) {
      const std::vector<Vertex> gone{e.u, e.v};
      const InducedSubgraph h = delete_vertices(fixture.graph, gone);
      const Embedding he = fixture.embedding.restrict_to(h);
      CHECK(he.satisfies_euler(h.graph));
      const Face x = exterior_face_of_H(h.graph, he);
      CHECK(x.length() == expected);
      for (Vertex v = 0; v < h.graph.order(); ++v)
        if (h.graph.degree(v) == 2) CHECK(x.contains_vertex(v));
    }
  }
  CHECK_THROWS_AS(exterior_face_of_H(fixtures::k4().graph, fixtures::k4().embedding), NoSuchFace);
}

TEST_CASE("exterior face needs exactly four degree-2 vertices") {
  const Graph c5 = fixtures::cycle_graph(5);
  CHECK_THROWS_AS(exterior_face_of_H(c5, compute_embedding(c5)), NoSuchFace);
}

TEST_CASE("plane embeddings of small graphs") {
  // 3-connected: one embedding up to mirror image
  CHECK(plane_embeddings(fixtures::k4().graph).size() == 1);
  CHECK(plane_embeddings(fixtures::cube().graph).size() == 1);
  CHECK(plane_embeddings(fixtures::cycle_graph(6)).size() == 1);
  // two triangles sharing a vertex: a single face structure on the sphere
  Graph bowtie(5);
  for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}) bowtie.add_edge(a, b);
  CHECK(plane_embeddings(bowtie).size() == 1);
  // three paths between two poles: one; four paths (K_{2,4}): three cyclic orders up to reflection
  Graph theta(5), k24(6);
  for (auto [a, b] : {std::pair{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}}) theta.add_edge(a, b);
  for (Vertex m = 2; m < 6; ++m) {
    k24.add_edge(0, m);
    k24.add_edge(1, m);
  }
  CHECK(plane_embeddings(theta).size() == 1);
  CHECK(plane_embeddings(k24).size() == 3);
  for (const Embedding& e : plane_embeddings(fixtures::complete_graph(4))) CHECK(e.face_count() == 4);
  CHECK_THROWS_AS(plane_embeddings(fixtures::complete_graph(12), 1000), std::invalid_argument);
}
