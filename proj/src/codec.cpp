#include "cubicycle/codec.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubicycle/error.hpp"

namespace cubicycle {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::string_view kPlanarHeader = ">>planar_code";

int graph6_byte(char c) {
  auto b = static_cast<unsigned char>(c);
  if (b < 63 || b > 126)
    throw MalformedEncoding("graph6: byte " + std::to_string(b) + " outside 63..126");
  return b - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw MalformedEncoding("graph6: empty record");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = graph6_byte(text[0]);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~')
      throw MalformedEncoding("graph6: orders above 258047 are not supported");
    if (text.size() < 4) throw MalformedEncoding("graph6: truncated order field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | graph6_byte(text[i]);
    pos = 4;
  }

  const long bits = n * (n - 1) / 2;
  const long expected = (bits + 5) / 6;
  if (static_cast<long>(text.size() - pos) != expected)
    throw MalformedEncoding("graph6: expected " + std::to_string(expected) +
                            " payload bytes for n=" + std::to_string(n) + ", got " +
                            std::to_string(text.size() - pos));

  Graph g(static_cast<int>(n));
  long k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = graph6_byte(text[pos + static_cast<std::size_t>(k / 6)]);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  // validate the padding bytes too
  for (std::size_t i = pos; i < text.size(); ++i) graph6_byte(text[i]);
  return g;
}

std::string write_graph6(const Graph& g) {
  const long n = g.order();
  if (n < 1 || n > kMaxGraph6Order) throw std::invalid_argument("graph6: order out of range");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::vector<EmbeddedGraph> parse_planar_code(std::span<const std::uint8_t> bytes) {
  std::size_t pos = 0;
  bool big_endian = false;
  const std::string_view view(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  if (view.starts_with(kPlanarHeader)) {
    auto close = view.find("<<", kPlanarHeader.size());
    if (close == std::string_view::npos) throw MalformedEncoding("planar_code: unterminated header");
    std::string_view tag = view.substr(kPlanarHeader.size(), close - kPlanarHeader.size());
    if (tag == " be")
      big_endian = true;
    else if (!tag.empty() && tag != " le")
      throw MalformedEncoding("planar_code: unknown header variant '" + std::string(tag) + "'");
    pos = close + 2;
  }

  std::vector<EmbeddedGraph> out;
  while (pos < bytes.size()) {
    const std::size_t ordinal = out.size();
    bool wide = false;
    auto read = [&]() -> unsigned {
      if (!wide) {
        if (pos >= bytes.size())
          throw TruncatedStream("planar_code: record " + std::to_string(ordinal) + " truncated");
        return bytes[pos++];
      }
      if (pos + 1 >= bytes.size())
        throw TruncatedStream("planar_code: record " + std::to_string(ordinal) + " truncated");
      unsigned a = bytes[pos], b = bytes[pos + 1];
      pos += 2;
      return big_endian ? (a << 8) | b : (b << 8) | a;
    };

    unsigned n = read();
    if (n == 0) {
      wide = true;
      n = read();
    }
    if (n == 0) throw MalformedEncoding("planar_code: record " + std::to_string(ordinal) + " has zero vertices");

    std::vector<std::vector<Vertex>> rotation(n);
    for (unsigned v = 0; v < n; ++v) {
      for (unsigned w = read(); w != 0; w = read()) {
        if (w > n)
          throw MalformedEncoding("planar_code: record " + std::to_string(ordinal) +
                                  " references vertex " + std::to_string(w) + " > n");
        rotation[v].push_back(static_cast<Vertex>(w - 1));
      }
    }

    Graph g(static_cast<int>(n));
    try {
      for (unsigned v = 0; v < n; ++v)
        for (Vertex w : rotation[v])
          if (static_cast<Vertex>(v) < w) g.add_edge(static_cast<Vertex>(v), w);
      Embedding emb(g, std::move(rotation));
      if (is_connected(g) && !emb.satisfies_euler(g))
        throw NonPlanar("planar_code: record " + std::to_string(ordinal) +
                        " rotation system is not a plane embedding");
      out.push_back({std::move(g), std::move(emb)});
    } catch (const std::invalid_argument& e) {
      throw MalformedEncoding("planar_code: record " + std::to_string(ordinal) + ": " + e.what());
    }
  }
  return out;
}

std::vector<std::uint8_t> write_planar_code(std::span<const EmbeddedGraph> graphs,
                                            bool with_header) {
  std::vector<std::uint8_t> out;
  if (with_header) {
    constexpr std::string_view h = ">>planar_code<<";
    out.insert(out.end(), h.begin(), h.end());
  }
  for (const EmbeddedGraph& eg : graphs) {
    const int n = eg.graph.order();
    const bool wide = n > 255;
    auto put = [&](unsigned x) {
      if (wide) {
        out.push_back(static_cast<std::uint8_t>(x & 0xff));
        out.push_back(static_cast<std::uint8_t>(x >> 8));
      } else {
        out.push_back(static_cast<std::uint8_t>(x));
      }
    };
    if (wide) out.push_back(0);
    put(static_cast<unsigned>(n));
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : eg.embedding.rotation(v)) put(static_cast<unsigned>(w + 1));
      put(0);
    }
  }
  return out;
}

}  // namespace cubicycle
