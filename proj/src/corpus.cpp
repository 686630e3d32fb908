#include "cubicycle/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cubicycle/error.hpp"
#include "cubicycle/fixtures.hpp"

namespace cubicycle {

namespace {

bool looks_like_planar_code(const std::string& data) {
  if (data.starts_with(">>planar_code")) return true;
  if (data.starts_with(">>graph6<<")) return false;
  // graph6 lines only use printable bytes 63..126 plus newlines
  return std::any_of(data.begin(), data.end(), [](char c) {
    auto b = static_cast<unsigned char>(c);
    return b != '\n' && b != '\r' && (b < 63 || b > 126);
  });
}

}  // namespace

std::vector<CorpusItem> load_corpus(const std::string& path, CorpusFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  const std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  if (format == CorpusFormat::automatic)
    format = !data.empty() && looks_like_planar_code(data) ? CorpusFormat::planar_code
                                                           : CorpusFormat::graph6;

  std::vector<CorpusItem> items;
  if (format == CorpusFormat::planar_code) {
    std::span<const std::uint8_t> bytes(reinterpret_cast<const std::uint8_t*>(data.data()), data.size());
    int ordinal = 0;
    for (EmbeddedGraph& eg : parse_planar_code(bytes)) {
      CorpusItem item{path, ordinal++, "", std::move(eg.graph), std::move(eg.embedding)};
      items.push_back(std::move(item));
    }
    return items;
  }

  std::istringstream lines(data);
  std::string line;
  int ordinal = 0;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == ">>graph6<<") continue;
    try {
      items.push_back({path, ordinal, "", parse_graph6(line), std::nullopt});
    } catch (const MalformedEncoding& e) {
      throw MalformedEncoding(path + ": record " + std::to_string(ordinal) + ": " + e.what());
    }
    ++ordinal;
  }
  return items;
}

std::vector<CorpusItem> builtin_corpus() {
  std::vector<CorpusItem> items;
  int ordinal = 0;
  for (NamedGraph& ng : fixtures::builtin()) {
    items.push_back({"builtin", ordinal++, ng.name, std::move(ng.graph.graph),
                     std::move(ng.graph.embedding)});
  }
  return items;
}

std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("nonisomorphic_graphs supports 1 <= n <= 6");
  std::vector<Edge> slots;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) slots.emplace_back(i, j);
  const int bits = static_cast<int>(slots.size());
  auto slot = [&](Vertex a, Vertex b) {
    const Edge e(a, b);
    return e.v * (e.v - 1) / 2 + e.u;
  };

  // bit images of every slot under every vertex permutation
  std::vector<std::vector<std::uint32_t>> image;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::uint32_t> im(static_cast<std::size_t>(bits));
    for (int k = 0; k < bits; ++k) im[k] = 1u << slot(perm[slots[k].u], perm[slots[k].v]);
    image.push_back(std::move(im));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
    bool minimal = true;
    for (const auto& im : image) {
      std::uint32_t pm = 0;
      for (int k = 0; k < bits; ++k)
        if (mask >> k & 1u) pm |= im[k];
      if (pm < mask) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    Graph g(n);
    for (int k = 0; k < bits; ++k)
      if (mask >> k & 1u) g.add_edge(slots[k].u, slots[k].v);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace cubicycle
