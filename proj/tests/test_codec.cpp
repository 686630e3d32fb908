#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cubicycle/codec.hpp"
#include "cubicycle/error.hpp"
#include "cubicycle/fixtures.hpp"
#include "oracles.hpp"

using namespace cubicycle;

TEST_CASE("graph6 known strings") {
  const Graph k4 = parse_graph6("C~");
  CHECK(k4.order() == 4);
  CHECK(k4.size() == 6);
  CHECK(parse_graph6("@").order() == 1);
  const Graph k2 = parse_graph6("A_");
  CHECK(k2.size() == 1);
  CHECK(parse_graph6("A?").size() == 0);
  CHECK(parse_graph6(">>graph6<<C~\n") == k4);
  CHECK(write_graph6(k4) == "C~");
  CHECK(write_graph6(fixtures::path_graph(3)) == "Bg");
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), MalformedEncoding);
  CHECK_THROWS_AS(parse_graph6("C"), MalformedEncoding);
  CHECK_THROWS_AS(parse_graph6("C~~"), MalformedEncoding);
  CHECK_THROWS_AS(parse_graph6("C\x20"), MalformedEncoding);
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 70;
    const Graph g = oracle::random_graph(n, 0.15, rng);
    const std::string s = write_graph6(g);
    CHECK(parse_graph6(s) == g);
    CHECK(write_graph6(parse_graph6(s)) == s);
  }
}

TEST_CASE("graph6 long-form header for n > 62") {
  const Graph g = fixtures::cycle_graph(100);
  const std::string s = write_graph6(g);
  CHECK(s[0] == '~');
  CHECK(parse_graph6(s) == g);
}

TEST_CASE("planar_code round trip preserves rotations") {
  const std::vector<EmbeddedGraph> in{fixtures::k4(), fixtures::cube(), fixtures::dodecahedron()};
  for (bool header : {true, false}) {
    const auto bytes = write_planar_code(in, header);
    const auto out = parse_planar_code(bytes);
    REQUIRE(out.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(out[i].graph == in[i].graph);
      for (Vertex v = 0; v < in[i].graph.order(); ++v)
        CHECK(out[i].embedding.rotation(v) == in[i].embedding.rotation(v));
    }
  }
}

TEST_CASE("planar_code K4 by hand") {
  const std::vector<std::uint8_t> bytes{4, 2, 3, 4, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0};
  const auto out = parse_planar_code(bytes);
  REQUIRE(out.size() == 1);
  CHECK(out[0].graph.size() == 6);
  CHECK(out[0].embedding.face_count() == 4);
}

TEST_CASE("planar_code errors") {
  CHECK(parse_planar_code(std::vector<std::uint8_t>{}).empty());
  const std::string header = ">>planar_code<<";
  CHECK(parse_planar_code(std::vector<std::uint8_t>(header.begin(), header.end())).empty());
  CHECK_THROWS_AS(parse_planar_code(std::vector<std::uint8_t>{4, 2, 3, 4, 0, 1}), TruncatedStream);
  CHECK_THROWS_AS(parse_planar_code(std::vector<std::uint8_t>{3, 2, 9, 0, 1, 3, 0, 1, 2, 0}), MalformedEncoding);
  // opposite rotation at one vertex of K4 breaks Euler's formula
  CHECK_THROWS_AS(parse_planar_code(std::vector<std::uint8_t>{4, 2, 4, 3, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0}),
                  NonPlanar);
}

TEST_CASE("planar_code 16-bit records above 255 vertices") {
  const Graph g = fixtures::cycle_graph(300);
  std::vector<std::vector<Vertex>> rot(300);
  for (Vertex v = 0; v < 300; ++v) rot[v] = g.neighbors(v);
  const std::vector<EmbeddedGraph> in{{g, Embedding(g, rot)}};
  const auto out = parse_planar_code(write_planar_code(in, true));
  REQUIRE(out.size() == 1);
  CHECK(out[0].graph == g);
}
