#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cubicycle/embedding.hpp"
#include "cubicycle/graph.hpp"

namespace cubicycle {

inline constexpr int kMaxGraph6Order = 258047;

/// Parses one graph6 line. Accepts an optional ">>graph6<<" prefix and a
/// trailing newline. Nonzero padding bits are ignored.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding, no header and no newline.
std::string write_graph6(const Graph& g);

struct EmbeddedGraph {
  Graph graph;
  Embedding embedding;
};

/// Parses a planar_code stream. Records whose first byte is 0 use 16-bit
/// entries; their byte order comes from a ">>planar_code le<<" or
/// ">>planar_code be<<" header and defaults to little-endian.
std::vector<EmbeddedGraph> parse_planar_code(std::span<const std::uint8_t> bytes);

/// Writes one planar_code record per graph using the embedding's rotation
/// order. Graphs with more than 255 vertices use the 16-bit little-endian form.
std::vector<std::uint8_t> write_planar_code(std::span<const EmbeddedGraph> graphs,
                                            bool with_header = true);

}  // namespace cubicycle
