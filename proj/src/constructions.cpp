#include "cubicycle/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "cubicycle/error.hpp"

namespace cubicycle {

Digraph acyclic_spanning_subdigraph(const Digraph& d) {
  for (const Arc& a : d.arcs)
    if (a.tail == a.head) throw LoopPresent("digraph has a loop at vertex " + std::to_string(a.tail));

  const auto n = static_cast<std::size_t>(d.n);
  std::vector<char> present(n, 1);
  std::vector<int> out = d.out_degrees(), in = d.in_degrees();
  std::vector<std::vector<int>> incident(n);
  for (int i = 0; i < static_cast<int>(d.arcs.size()); ++i) {
    incident[d.arcs[i].tail].push_back(i);
    incident[d.arcs[i].head].push_back(i);
  }

  std::vector<char> kept(d.arcs.size(), 0);
  for (std::size_t round = 0; round < n; ++round) {
    Vertex v = -1;
    for (Vertex u = 0; u < d.n; ++u)
      if (present[u] && out[u] <= in[u]) {
        v = u;
        break;
      }
    // sum of out-degrees equals sum of in-degrees, so some vertex qualifies
    if (v < 0) throw std::logic_error("no vertex with out-degree <= in-degree");

    for (int id : incident[v]) {
      const Arc& a = d.arcs[id];
      const Vertex other = a.tail == v ? a.head : a.tail;
      if (!present[other]) continue;
      if (a.head == v) kept[id] = 1;
      --out[a.tail];
      --in[a.head];
    }
    present[v] = 0;
  }

  Digraph sub{d.n, {}};
  for (std::size_t i = 0; i < d.arcs.size(); ++i)
    if (kept[i]) sub.arcs.push_back(d.arcs[i]);
  return sub;
}

bool is_acyclic(const Digraph& d) {
  std::vector<int> in = d.in_degrees();
  std::vector<std::vector<Vertex>> heads(static_cast<std::size_t>(d.n));
  for (const Arc& a : d.arcs) heads[a.tail].push_back(a.head);
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < d.n; ++v)
    if (in[v] == 0) ready.push_back(v);
  int removed = 0;
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    ++removed;
    for (Vertex w : heads[v])
      if (--in[w] == 0) ready.push_back(w);
  }
  return removed == d.n;
}

bool check_acyclic_subdigraph(const Digraph& d, const Digraph& sub) {
  if (sub.n != d.n) return false;
  std::multiset<Arc> pool(d.arcs.begin(), d.arcs.end());
  for (const Arc& a : sub.arcs) {
    auto it = pool.find(a);
    if (it == pool.end()) return false;
    pool.erase(it);
  }
  if (!is_acyclic(sub)) return false;
  const auto out = d.out_degrees();
  const auto sub_out = sub.out_degrees(), sub_in = sub.in_degrees();
  for (Vertex v = 0; v < d.n; ++v)
    if (sub_out[v] + sub_in[v] < out[v]) return false;
  return true;
}

bool TriangleClassification::identities_hold(int n) const {
  return 3 * (tau0 + tau1 + tau2) == 2 * n && n == 2 * tau2 + tau1 && tau2 == 3 * tau0 + tau1 &&
         3 * tau2 >= n;
}

std::vector<int> TriangleClassification::two_triangles() const {
  std::vector<int> out;
  for (int t = 0; t < static_cast<int>(classes.size()); ++t)
    if (classes[t] == 2) out.push_back(t);
  return out;
}

TriangleClassification classify_triangles(const LineGraph& lg, const Cycle& c) {
  if (!lg.map.has_triangles) throw NotCubic("line graph map has no triangle partition");
  if (c.length() != lg.graph.order() || !is_valid_cycle(lg.graph, c))
    throw NotHamiltonian("cycle is not a Hamilton cycle of the line graph");

  const auto edges = c.edges();
  const std::set<Edge> on_cycle(edges.begin(), edges.end());
  TriangleClassification cls;
  cls.classes.reserve(lg.map.triangles.size());
  for (const auto& t : lg.map.triangles) {
    const std::array<Edge, 3> sides{Edge(t[0], t[1]), Edge(t[0], t[2]), Edge(t[1], t[2])};
    int j = 0;
    for (const Edge& e : sides) j += on_cycle.contains(e);
    Vertex centre = -1;
    if (j == 2) {
      for (Vertex v : t) {
        int deg = 0;
        for (const Edge& e : sides) deg += e.has(v) && on_cycle.contains(e);
        if (deg == 2) centre = v;
      }
    }
    cls.classes.push_back(j);
    cls.centres.push_back(centre);
    (j == 0 ? cls.tau0 : j == 1 ? cls.tau1 : cls.tau2) += 1;
    if (j == 3) throw NotHamiltonian("a Hamilton cycle cannot contain a whole triangle");
  }
  return cls;
}

Cycle shorten_by_centers(const LineGraph& lg, const Cycle& c, const TriangleClassification& cls,
                         std::span<const int> chosen) {
  std::vector<char> drop(static_cast<std::size_t>(lg.graph.order()), 0);
  for (int t : chosen) {
    if (t < 0 || t >= static_cast<int>(cls.classes.size()) || cls.classes[t] != 2)
      throw NotTwoTriangle("triangle " + std::to_string(t) + " is not a 2-triangle");
    drop[cls.centres[t]] = 1;
  }
  Cycle out;
  for (Vertex v : c.vertices)
    if (!drop[v]) out.vertices.push_back(v);
  return out;
}

Cycle lift_cycle(const LineGraph& lg, const Cycle& c_h) {
  Cycle out;
  const auto& v = c_h.vertices;
  out.vertices.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out.vertices.push_back(lg.map.edge_to_vertex(Edge(v[i], v[(i + 1) % v.size()])));
  return out;
}

SMap compute_s_map(const LineGraph& lg, const Cycle& c_g) {
  if (!lg.map.has_triangles) throw NotCubic("line graph map has no triangle partition");
  const auto& v = c_g.vertices;
  const std::set<Vertex> on_cycle(v.begin(), v.end());
  SMap out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vertex a = v[i], b = v[(i + 1) % v.size()];
    const Vertex y = lg.map.shared_endpoint(a, b);
    const auto& t = lg.map.triangles[y];
    Vertex apex = -1;
    for (Vertex x : t)
      if (x != a && x != b) apex = x;
    if (on_cycle.contains(apex))
      throw UniquenessViolation("facial triangle at position " + std::to_string(i) +
                                " meets the cycle in more than one edge");
    out.apex.push_back(apex);
    out.base_vertex.push_back(y);
  }
  return out;
}

LambdaSet maximal_lambda(const SMap& smap, const Cycle& c_g) {
  const auto& v = c_g.vertices;
  const int l = static_cast<int>(v.size());
  const int first = static_cast<int>(std::min_element(v.begin(), v.end()) - v.begin());
  std::set<Vertex> seen;
  LambdaSet out;
  for (int k = 0; k < l; ++k) {
    const int pos = (first + k) % l;
    if (seen.insert(smap.apex[pos]).second) out.positions.push_back(pos);
  }
  return out;
}

Cycle extend_by_lambda(const SMap& smap, const Cycle& c_g, std::span<const int> positions) {
  const auto& v = c_g.vertices;
  std::set<Vertex> used(v.begin(), v.end());
  std::vector<char> chosen(v.size(), 0);
  for (int p : positions) {
    if (p < 0 || p >= static_cast<int>(v.size()) || chosen[p])
      throw std::invalid_argument("invalid or repeated Lambda position");
    chosen[p] = 1;
    if (!used.insert(smap.apex[p]).second)
      throw CollisionDetected("apex " + std::to_string(smap.apex[p]) +
                              " already on the cycle or chosen twice");
  }
  Cycle out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.vertices.push_back(v[i]);
    if (chosen[i]) out.vertices.push_back(smap.apex[i]);
  }
  return out;
}

std::vector<Edge> chords(const Graph& y, const Cycle& c_h) {
  std::vector<char> on(static_cast<std::size_t>(y.order()), 0);
  for (Vertex v : c_h.vertices) on[v] = 1;
  std::vector<Edge> out;
  for (const Edge& e : y.edges())
    if (on[e.u] && on[e.v] && !c_h.contains_edge(e)) out.push_back(e);
  return out;
}

}  // namespace cubicycle
