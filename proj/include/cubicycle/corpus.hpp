#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubicycle/codec.hpp"

namespace cubicycle {

enum class CorpusFormat { automatic, graph6, planar_code };

struct CorpusItem {
  std::string file;
  int ordinal = 0;
  /// Empty for ingested records, set for built-in fixtures.
  std::string name;
  Graph graph;
  /// Supplied by planar_code records and fixtures; computed on demand for
  /// graph6 records.
  std::optional<Embedding> embedding;
};

/// Reads a whole corpus file. Throws std::runtime_error on IO failure and
/// MalformedEncoding (mentioning the record ordinal) on bad records.
std::vector<CorpusItem> load_corpus(const std::string& path, CorpusFormat format);

std::vector<CorpusItem> builtin_corpus();

/// Non-isomorphic simple graphs on exactly n vertices (n <= 6), in increasing
/// order of their canonical adjacency bitmask.
std::vector<Graph> nonisomorphic_graphs(int n);

}  // namespace cubicycle
