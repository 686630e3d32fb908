#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cubicycle/connectivity.hpp"
#include "cubicycle/error.hpp"
#include "cubicycle/fixtures.hpp"
#include "cubicycle/line_graph.hpp"
#include "oracles.hpp"

using namespace cubicycle;

TEST_CASE("vertex connectivity examples") {
  CHECK(is_k_connected(fixtures::cycle_graph(5), 2));
  CHECK_FALSE(is_k_connected(fixtures::cycle_graph(5), 3));
  CHECK_FALSE(is_k_connected(fixtures::path_graph(4), 2));
  CHECK(is_k_connected(fixtures::k4().graph, 3));
  CHECK(is_k_connected(fixtures::cube().graph, 3));
  CHECK_FALSE(is_k_connected(fixtures::cube().graph, 4));
  CHECK(is_k_connected(fixtures::complete_graph(5), 4));
}

TEST_CASE("small edge cuts") {
  const auto path = enumerate_small_edge_cuts(fixtures::path_graph(4), 1);
  CHECK(path.size() == 3);
  CHECK(enumerate_small_edge_cuts(fixtures::cycle_graph(5), 1).empty());
  CHECK(enumerate_small_edge_cuts(fixtures::cycle_graph(5), 2).size() == 10);
  // Q3 has exactly its 8 vertex stars as 3-bonds
  const auto q3 = enumerate_small_edge_cuts(fixtures::cube().graph, 3);
  CHECK(q3.size() == 8);
  for (const EdgeCut& c : q3) CHECK(std::min(c.side_a.size(), c.side_b.size()) == 1);
  // the prism has one more: the three rungs
  CHECK(enumerate_small_edge_cuts(fixtures::triangular_prism(), 3).size() == 7);
  Graph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  const auto disc = enumerate_small_edge_cuts(two, 3);
  REQUIRE(disc.size() == 1);
  CHECK(disc[0].edges.empty());
}

TEST_CASE("cyclic 4-edge-connectivity on named graphs") {
  CHECK(is_cyclically_4ec(fixtures::k4().graph));
  CHECK(is_cyclically_4ec(fixtures::cube().graph));
  CHECK(is_cyclically_4ec(fixtures::dodecahedron().graph));
  CHECK(is_cyclically_4ec(fixtures::petersen()));
  CHECK_FALSE(is_cyclically_4ec(fixtures::triangular_prism()));
  CHECK_THROWS_AS(is_cyclically_4ec(fixtures::cycle_graph(4)), NotCubic);
}

TEST_CASE("both characterisations agree on random cubic graphs") {
  std::mt19937_64 rng(5);
  int yes = 0, no = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_cubic(6 + 2 * (trial % 5), rng);
    const bool a = is_cyclically_4ec(g);
    CHECK(a == all_three_cuts_trivial(g));
    (a ? yes : no) += 1;
  }
  CHECK(yes > 0);
  CHECK(no > 0);
}

TEST_CASE("connectivity of small line graphs and cycles") {
  const Graph cubo = line_graph(fixtures::cube().graph).graph;
  CHECK(is_k_connected(cubo, 4));
  CHECK_FALSE(is_k_connected(fixtures::cycle_graph(6), 3));
}

TEST_CASE("small cuts of K4 and C4") {
  const auto k4 = enumerate_small_edge_cuts(fixtures::k4().graph, 3);
  CHECK(k4.size() == 4);
  for (const EdgeCut& c : k4) CHECK(c.side_a.size() + c.side_b.size() == 4);
  const auto c4 = enumerate_small_edge_cuts(fixtures::cycle_graph(4), 3);
  CHECK(c4.size() == 6);
  for (const EdgeCut& c : c4) CHECK(c.edges.size() == 2);
  CHECK(enumerate_small_edge_cuts(fixtures::cube().graph, 2).empty());
}
