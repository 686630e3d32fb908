#include "cubicycle/embedding.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "cubicycle/error.hpp"

namespace cubicycle {

std::vector<Vertex> Face::vertices() const {
  std::vector<Vertex> out;
  out.reserve(darts.size());
  for (const Dart& d : darts) out.push_back(d.tail);
  return out;
}

bool Face::contains_vertex(Vertex v) const {
  return std::any_of(darts.begin(), darts.end(), [v](const Dart& d) { return d.tail == v; });
}

bool Face::contains_edge(Edge e) const {
  return std::any_of(darts.begin(), darts.end(),
                     [e](const Dart& d) { return Edge(d.tail, d.head) == e; });
}

Embedding::Embedding(const Graph& g, std::vector<std::vector<Vertex>> rotation)
    : rotation_(std::move(rotation)) {
  if (static_cast<int>(rotation_.size()) != g.order())
    throw std::invalid_argument("rotation system has wrong vertex count");
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> sorted = rotation_[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbors(v))
      throw std::invalid_argument("rotation at vertex " + std::to_string(v) +
                                  " does not match its neighbourhood");
  }
}

Vertex Embedding::successor(Vertex at, Vertex from) const {
  const auto& rot = rotation_[at];
  auto it = std::find(rot.begin(), rot.end(), from);
  if (it == rot.end()) throw std::invalid_argument("dart not in rotation");
  ++it;
  return it == rot.end() ? rot.front() : *it;
}

std::vector<Face> Embedding::faces() const {
  std::map<Dart, bool> used;
  for (Vertex v = 0; v < order(); ++v)
    for (Vertex w : rotation_[v]) used[{v, w}] = false;
  std::vector<Face> out;
  for (auto& [start, flag] : used) {
    if (flag) continue;
    Face f;
    Dart d = start;
    do {
      used[d] = true;
      f.darts.push_back(d);
      d = Dart{d.head, successor(d.head, d.tail)};
    } while (d != start);
    out.push_back(std::move(f));
  }
  return out;
}

int Embedding::face_count() const { return static_cast<int>(faces().size()); }

bool Embedding::satisfies_euler(const Graph& g) const {
  const int f = g.size() == 0 ? 1 : face_count();
  return g.order() - g.size() + f == 2;
}

Embedding Embedding::restrict_to(const InducedSubgraph& sub) const {
  std::vector<std::vector<Vertex>> rot(sub.new_to_old.size());
  for (std::size_t nv = 0; nv < sub.new_to_old.size(); ++nv)
    for (Vertex w : rotation_[sub.new_to_old[nv]])
      if (sub.old_to_new[w] >= 0) rot[nv].push_back(sub.old_to_new[w]);
  return Embedding(sub.graph, std::move(rot));
}

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(static_cast<std::size_t>(g.order()));
  int index = 0;
  for (const Edge& e : g.edges()) {
    auto [be, ok] = boost::add_edge(e.u, e.v, bg);
    boost::put(boost::edge_index, bg, be, index++);
  }
  return bg;
}

}  // namespace

bool is_planar(const Graph& g) {
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::vector<Embedding> plane_embeddings(const Graph& g, long long max_rotations) {
  const int n = g.order();
  long long total = 1;
  for (Vertex v = 0; v < n; ++v)
    for (int k = 2; k < g.degree(v); ++k) {
      total *= k;
      if (total > max_rotations) throw std::invalid_argument("too many rotation systems");
    }

  // Each rotation keeps its smallest neighbour first and permutes the rest.
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) rot[v] = g.neighbors(v);

  std::vector<Embedding> out;
  std::set<std::vector<std::vector<Edge>>> seen;
  while (true) {
    Embedding e(g, rot);
    if (e.satisfies_euler(g)) {
      std::vector<std::vector<Edge>> key;
      for (const Face& f : e.faces()) {
        std::vector<Edge> es;
        for (const Dart& d : f.darts) es.emplace_back(d.tail, d.head);
        std::sort(es.begin(), es.end());
        key.push_back(std::move(es));
      }
      std::sort(key.begin(), key.end());
      if (seen.insert(std::move(key)).second) out.push_back(std::move(e));
    }
    Vertex v = 0;
    while (v < n && (rot[v].size() < 3 || !std::next_permutation(rot[v].begin() + 1, rot[v].end()))) ++v;
    if (v == n) break;
  }
  return out;
}

Embedding compute_embedding(const Graph& g) {
  BoostGraph bg = to_boost(g);
  std::vector<std::vector<BoostEdge>> storage(boost::num_vertices(bg));
  auto embedding = boost::make_iterator_property_map(storage.begin(),
                                                     boost::get(boost::vertex_index, bg));
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                           boost::boyer_myrvold_params::embedding = embedding))
    throw NonPlanar("graph admits no planar embedding");

  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v)
    for (const BoostEdge& be : storage[v]) {
      auto a = static_cast<Vertex>(boost::source(be, bg));
      auto b = static_cast<Vertex>(boost::target(be, bg));
      rot[v].push_back(a == v ? b : a);
    }
  Embedding out(g, std::move(rot));
  if (is_connected(g) && !out.satisfies_euler(g))
    throw NonPlanar("planarity test returned an embedding violating Euler's formula");
  return out;
}

Face exterior_face_of_H(const Graph& h, const Embedding& e) {
  std::vector<Vertex> low;
  for (Vertex v = 0; v < h.order(); ++v)
    if (h.degree(v) == 2) low.push_back(v);
  if (low.size() != 4)
    throw NoSuchFace("expected exactly four degree-2 vertices, found " +
                     std::to_string(low.size()));
  std::optional<Face> best;
  for (Face& f : e.faces()) {
    bool all = std::all_of(low.begin(), low.end(),
                           [&](Vertex v) { return f.contains_vertex(v); });
    if (all && (!best || f.darts < best->darts)) best = std::move(f);
  }
  if (!best) throw NoSuchFace("no face contains all four degree-2 vertices");
  return *best;
}

}  // namespace cubicycle
