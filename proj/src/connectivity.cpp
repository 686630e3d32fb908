#include "cubicycle/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "cubicycle/error.hpp"

namespace cubicycle {

namespace {

// Adjacency with edge ids so edge subsets can be masked out cheaply.
struct IndexedGraph {
  std::vector<Edge> edges;
  std::vector<std::vector<std::pair<Vertex, int>>> inc;

  explicit IndexedGraph(const Graph& g) : edges(g.edges()), inc(static_cast<std::size_t>(g.order())) {
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
      inc[edges[i].u].emplace_back(edges[i].v, i);
      inc[edges[i].v].emplace_back(edges[i].u, i);
    }
  }

  int order() const { return static_cast<int>(inc.size()); }

  // Returns number of components; fills label.
  int components(const std::vector<char>& removed, std::vector<int>& label) const {
    label.assign(inc.size(), -1);
    int count = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < order(); ++s) {
      if (label[s] != -1) continue;
      label[s] = count;
      stack.assign(1, s);
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (auto [w, id] : inc[x])
          if (!removed[id] && label[w] == -1) {
            label[w] = count;
            stack.push_back(w);
          }
      }
      ++count;
    }
    return count;
  }
};

// Calls fn(subset) for every subset of {0..m-1} with 1 <= size <= max_size,
// by increasing size then lexicographically.
void for_each_subset(int m, int max_size, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx;
  for (int size = 1; size <= std::min(max_size, m); ++size) {
    idx.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      fn(idx);
      int i = size - 1;
      while (i >= 0 && idx[i] == m - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

}  // namespace

bool is_k_connected(const Graph& g, int k) {
  const int n = g.order();
  if (k < 1 || k > 4) throw std::invalid_argument("is_k_connected supports k in 1..4");
  if (n <= k) throw std::invalid_argument("is_k_connected requires more than k vertices");
  if (!is_connected(g)) return false;
  std::vector<char> keep(static_cast<std::size_t>(n), 1);
  std::vector<int> sep;
  // Separators of size exactly 1..k-1; connected already covers size 0.
  std::function<bool(int, int)> rec = [&](int start, int left) -> bool {
    if (left == 0) {
      auto label = component_labels(g, keep);
      return std::all_of(label.begin(), label.end(), [](int l) { return l <= 0; });
    }
    for (int v = start; v < n; ++v) {
      keep[v] = 0;
      bool ok = rec(v + 1, left - 1);
      keep[v] = 1;
      if (!ok) return false;
    }
    return true;
  };
  for (int size = 1; size < k; ++size)
    if (!rec(0, size)) return false;
  return true;
}

std::vector<EdgeCut> enumerate_small_edge_cuts(const Graph& g, int max_size) {
  const IndexedGraph ig(g);
  std::vector<int> label;
  std::vector<char> removed(ig.edges.size(), 0);

  auto sides = [&](const std::vector<int>& lab, int target_a) {
    EdgeCut cut;
    for (Vertex v = 0; v < g.order(); ++v) (lab[v] == target_a ? cut.side_a : cut.side_b).push_back(v);
    return cut;
  };

  if (g.order() > 0 && ig.components(removed, label) > 1) return {sides(label, 0)};

  std::vector<EdgeCut> out;
  for_each_subset(static_cast<int>(ig.edges.size()), max_size, [&](const std::vector<int>& s) {
    for (int id : s) removed[id] = 1;
    if (ig.components(removed, label) == 2 &&
        std::all_of(s.begin(), s.end(), [&](int id) {
          return label[ig.edges[id].u] != label[ig.edges[id].v];
        })) {
      EdgeCut cut = sides(label, 0);
      for (int id : s) cut.edges.push_back(ig.edges[id]);
      out.push_back(std::move(cut));
    }
    for (int id : s) removed[id] = 0;
  });
  std::sort(out.begin(), out.end(), [](const EdgeCut& a, const EdgeCut& b) { return a.edges < b.edges; });
  return out;
}

bool is_cyclically_4ec(const Graph& g) {
  if (!is_cubic(g)) throw NotCubic("cyclic 4-edge-connectivity is defined here for cubic graphs");
  if (g.order() < 4 || !is_k_connected(g, 3)) return false;
  const IndexedGraph ig(g);
  std::vector<int> label;
  std::vector<char> removed(ig.edges.size(), 0);
  bool ok = true;
  for_each_subset(static_cast<int>(ig.edges.size()), 3, [&](const std::vector<int>& s) {
    if (!ok) return;
    for (int id : s) removed[id] = 1;
    const int comps = ig.components(removed, label);
    if (comps > 1) {
      std::vector<int> vcount(static_cast<std::size_t>(comps), 0), ecount(static_cast<std::size_t>(comps), 0);
      for (Vertex v = 0; v < g.order(); ++v) ++vcount[label[v]];
      for (std::size_t id = 0; id < ig.edges.size(); ++id)
        if (!removed[id]) ++ecount[label[ig.edges[id].u]];
      bool has_tree = false;
      for (int c = 0; c < comps; ++c) has_tree = has_tree || ecount[c] == vcount[c] - 1;
      ok = has_tree;
    }
    for (int id : s) removed[id] = 0;
  });
  return ok;
}

bool all_three_cuts_trivial(const Graph& g) {
  if (!is_cubic(g)) throw NotCubic("expected a cubic graph");
  if (g.order() < 4 || !is_k_connected(g, 3)) return false;
  for (const EdgeCut& cut : enumerate_small_edge_cuts(g, 3)) {
    if (cut.edges.size() < 3) return false;
    if (cut.side_a.size() != 1 && cut.side_b.size() != 1) return false;
  }
  return true;
}

}  // namespace cubicycle
