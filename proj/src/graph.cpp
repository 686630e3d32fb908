#include "cubicycle/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace cubicycle {

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::add_edge(Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
  if (a < 0 || b < 0 || a >= order() || b >= order())
    throw std::invalid_argument("edge endpoint out of range");
  auto& na = adj_[a];
  auto it = std::lower_bound(na.begin(), na.end(), b);
  if (it != na.end() && *it == b)
    throw std::invalid_argument("duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
  na.insert(it, b);
  auto& nb = adj_[b];
  nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
  ++edge_count_;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a < 0 || a >= order()) return false;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex w : adj_[u])
      if (u < w) out.emplace_back(u, w);
  return out;
}

std::vector<int> Digraph::out_degrees() const {
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  for (const Arc& a : arcs) ++d[a.tail];
  return d;
}

std::vector<int> Digraph::in_degrees() const {
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  for (const Arc& a : arcs) ++d[a.head];
  return d;
}

std::vector<Edge> Cycle::edges() const {
  std::vector<Edge> out;
  const auto l = vertices.size();
  out.reserve(l);
  for (std::size_t i = 0; i < l; ++i) out.emplace_back(vertices[i], vertices[(i + 1) % l]);
  return out;
}

bool Cycle::contains(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool Cycle::contains_edge(Edge e) const {
  const auto l = vertices.size();
  for (std::size_t i = 0; i < l; ++i)
    if (Edge(vertices[i], vertices[(i + 1) % l]) == e) return true;
  return false;
}

Cycle canonical(Cycle c) {
  auto& v = c.vertices;
  if (v.size() < 2) return c;
  std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
  if (v.size() > 2 && v.back() < v[1]) std::reverse(v.begin() + 1, v.end());
  return c;
}

bool is_valid_cycle(const Graph& g, const Cycle& c, std::optional<Vertex> forbid) {
  const auto& v = c.vertices;
  if (v.size() < 3) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex x : v) {
    if (x < 0 || x >= g.order() || seen[x]) return false;
    if (forbid && x == *forbid) return false;
    seen[x] = 1;
  }
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!g.adjacent(v[i], v[(i + 1) % v.size()])) return false;
  return true;
}

InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  InducedSubgraph out;
  out.old_to_new.assign(static_cast<std::size_t>(g.order()), 0);
  for (Vertex r : removed) out.old_to_new.at(static_cast<std::size_t>(r)) = -1;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (out.old_to_new[u] == -1) continue;
    out.old_to_new[u] = static_cast<Vertex>(out.new_to_old.size());
    out.new_to_old.push_back(u);
  }
  out.graph = Graph(static_cast<int>(out.new_to_old.size()));
  for (const Edge& e : g.edges()) {
    Vertex a = out.old_to_new[e.u], b = out.old_to_new[e.v];
    if (a >= 0 && b >= 0) out.graph.add_edge(a, b);
  }
  return out;
}

bool is_cubic(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 3) return false;
  return true;
}

std::vector<int> component_labels(const Graph& g, const std::vector<char>& keep) {
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (!keep[s] || label[s] != -1) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(x))
        if (keep[w] && label[w] == -1) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return label;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> keep(static_cast<std::size_t>(g.order()), 1);
  auto label = component_labels(g, keep);
  return std::all_of(label.begin(), label.end(), [](int l) { return l == 0; });
}

int girth(const Graph& g) {
  const int n = g.order();
  int best = kInfiniteGirth;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    queue.assign(1, s);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      if (2 * dist[x] + 1 >= best) break;
      for (Vertex w : g.neighbors(x)) {
        if (dist[w] == -1) {
          dist[w] = dist[x] + 1;
          parent[w] = x;
          queue.push_back(w);
        } else if (parent[x] != w) {
          best = std::min(best, dist[x] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

}  // namespace cubicycle
