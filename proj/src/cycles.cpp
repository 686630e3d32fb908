#include "cubicycle/cycles.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>

#include "cubicycle/error.hpp"

namespace cubicycle {

namespace {

constexpr std::uint64_t kChargeBatch = 4096;

// Backtracking search for cycles of one fixed length.
//
// Free mode: every cycle is rooted at its smallest vertex and reported once,
// with path[1] < path.back(). Prefix mode: every cycle starting with the given
// path (in that direction) is reported once.
class LengthSearch {
 public:
  LengthSearch(const Graph& g, int length, std::optional<Vertex> forbid, Budget& budget,
               const CycleVisitor& visit)
      : g_(g), length_(length), forbid_(forbid), budget_(budget), visit_(visit),
        n_(g.order()), allowed_(static_cast<std::size_t>(n_), 0),
        on_path_(static_cast<std::size_t>(n_), 0), dist_(static_cast<std::size_t>(n_), -1),
        mark_(static_cast<std::size_t>(n_), 0) {}

  bool run_free() {
    const bool stopped = free_roots();
    flush();
    return stopped;
  }

  bool run_prefix(const std::vector<Vertex>& prefix) {
    const bool stopped = from_prefix(prefix);
    flush();
    return stopped;
  }

 private:
  bool free_roots() {
    if (length_ < 3) return false;
    for (Vertex s = 0; s < n_; ++s) {
      if (forbid_ && s == *forbid_) continue;
      allowed_count_ = 0;
      for (Vertex v = 0; v < n_; ++v) {
        allowed_[v] = v >= s && !(forbid_ && v == *forbid_);
        allowed_count_ += allowed_[v];
      }
      if (allowed_count_ < length_) break;  // later roots have even fewer vertices
      oriented_ = true;
      if (start(std::vector<Vertex>{s})) return true;
    }
    return false;
  }

  bool from_prefix(const std::vector<Vertex>& prefix) {
    if (length_ < 3 || static_cast<int>(prefix.size()) > length_) return false;
    allowed_count_ = 0;
    for (Vertex v = 0; v < n_; ++v) {
      allowed_[v] = !(forbid_ && v == *forbid_);
      allowed_count_ += allowed_[v];
    }
    for (Vertex v : prefix)
      if (!allowed_[v]) return false;
    for (std::size_t i = 0; i + 1 < prefix.size(); ++i)
      if (!g_.adjacent(prefix[i], prefix[i + 1])) return false;
    oriented_ = false;
    return start(prefix);
  }

  bool start(const std::vector<Vertex>& prefix) {
    root_ = prefix.front();
    bfs_distances(root_);
    path_ = prefix;
    std::fill(on_path_.begin(), on_path_.end(), 0);
    for (Vertex v : prefix) {
      if (on_path_[v]) return false;
      on_path_[v] = 1;
    }
    hamiltonian_ = length_ == allowed_count_;
    return extend();
  }

  void bfs_distances(Vertex s) {
    std::fill(dist_.begin(), dist_.end(), -1);
    queue_.assign(1, s);
    dist_[s] = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      Vertex x = queue_[head];
      for (Vertex w : g_.neighbors(x))
        if (allowed_[w] && dist_[w] == -1) {
          dist_[w] = dist_[x] + 1;
          queue_.push_back(w);
        }
    }
  }

  void charge() {
    if (++pending_ == kChargeBatch) flush();
  }
  void flush() {
    if (pending_ == 0) return;
    std::uint64_t p = pending_;
    pending_ = 0;
    budget_.charge(p);
  }

  // Vertices still reachable from x through unused allowed vertices, and
  // whether at least one of them can close the cycle back to the root.
  bool reachable_enough(Vertex x, int remain) {
    ++stamp_;
    if (stamp_ == 0) {
      std::fill(mark_.begin(), mark_.end(), 0);
      stamp_ = 1;
    }
    queue_.assign(1, x);
    mark_[x] = stamp_;
    int count = 0;
    bool closes = false;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      Vertex u = queue_[head];
      for (Vertex w : g_.neighbors(u))
        if (allowed_[w] && !on_path_[w] && mark_[w] != stamp_) {
          mark_[w] = stamp_;
          ++count;
          closes = closes || g_.adjacent(w, root_);
          queue_.push_back(w);
        }
    }
    return count >= remain && closes;
  }

  // Every unused vertex must keep two usable neighbours.
  bool degrees_ok(Vertex tip) const {
    for (Vertex v = 0; v < n_; ++v) {
      if (!allowed_[v] || on_path_[v]) continue;
      int usable = 0;
      for (Vertex w : g_.neighbors(v))
        if (allowed_[w] && (!on_path_[w] || w == tip || w == root_)) ++usable;
      if (usable < 2) return false;
    }
    return true;
  }

  bool extend() {
    charge();
    const Vertex tip = path_.back();
    const int remain = length_ - static_cast<int>(path_.size());
    if (remain == 0) {
      if (!g_.adjacent(tip, root_)) return false;
      if (oriented_ && path_[1] > path_.back()) return false;
      cycle_.vertices = path_;
      return visit_(cycle_);
    }
    if (dist_[tip] < 0 || dist_[tip] > remain + 1) return false;
    if (remain >= 2 && !reachable_enough(tip, remain)) return false;
    if (hamiltonian_ && !degrees_ok(tip)) return false;

    for (Vertex w : g_.neighbors(tip)) {
      if (!allowed_[w] || on_path_[w]) continue;
      // closing vertex must be a root neighbour; cheap test before recursing
      if (remain == 1 && !g_.adjacent(w, root_)) continue;
      on_path_[w] = 1;
      path_.push_back(w);
      const bool stop = extend();
      path_.pop_back();
      on_path_[w] = 0;
      if (stop) return true;
    }
    return false;
  }

  const Graph& g_;
  const int length_;
  const std::optional<Vertex> forbid_;
  Budget& budget_;
  const CycleVisitor& visit_;
  const int n_;

  std::vector<char> allowed_;
  std::vector<char> on_path_;
  std::vector<int> dist_;
  std::vector<unsigned> mark_;
  unsigned stamp_ = 0;
  std::vector<Vertex> queue_;
  std::vector<Vertex> path_;
  Cycle cycle_;
  Vertex root_ = 0;
  int allowed_count_ = 0;
  bool oriented_ = true;
  bool hamiltonian_ = false;
  std::uint64_t pending_ = 0;
};

// Runs a prefix-mode search and returns the first accepted cycle.
std::optional<Cycle> find_with_prefix(const Graph& g, int length, std::optional<Vertex> forbid,
                                      const std::vector<Vertex>& prefix,
                                      const std::function<bool(const Cycle&)>& accept,
                                      Budget& budget) {
  std::optional<Cycle> out;
  CycleVisitor visit = [&](const Cycle& c) {
    if (!accept(c)) return false;
    out = c;
    return true;
  };
  LengthSearch search(g, length, forbid, budget, visit);
  search.run_prefix(prefix);
  return out;
}

}  // namespace

bool for_each_cycle(const Graph& g, int length, std::optional<Vertex> forbid,
                    const CycleVisitor& visit, Budget& budget) {
  LengthSearch search(g, length, forbid, budget, visit);
  return search.run_free();
}

std::optional<Cycle> find_cycle_if(const Graph& g, int length, std::optional<Vertex> forbid,
                                   const std::function<bool(const Cycle&)>& accept,
                                   Budget& budget) {
  std::optional<Cycle> out;
  CycleVisitor visit = [&](const Cycle& c) {
    if (!accept(c)) return false;
    out = c;
    return true;
  };
  for_each_cycle(g, length, forbid, visit, budget);
  return out;
}

std::optional<Cycle> find_cycle_of_length(const Graph& g, int length,
                                          std::optional<Vertex> forbid, Budget& budget) {
  return find_cycle_if(g, length, forbid, [](const Cycle&) { return true; }, budget);
}

std::optional<Cycle> find_cycle_of_length(const Graph& g, int length,
                                          std::optional<Vertex> forbid) {
  Budget budget;
  return find_cycle_of_length(g, length, forbid, budget);
}

std::vector<int> CycleSpectrum::lengths() const {
  std::vector<int> out;
  for (const auto& [l, c] : witnesses) out.push_back(l);
  return out;
}

CycleSpectrum cycle_spectrum_serial(const Graph& g, std::optional<Vertex> forbid,
                                    Budget& budget) {
  CycleSpectrum spec;
  spec.forbid = forbid;
  for (int l = 3; l <= g.order(); ++l)
    if (auto c = find_cycle_of_length(g, l, forbid, budget)) spec.witnesses.emplace(l, std::move(*c));
  return spec;
}

CycleSpectrum cycle_spectrum(const Graph& g, std::optional<Vertex> forbid, Budget& budget) {
  const int n = g.order();
  std::vector<std::optional<Cycle>> found(static_cast<std::size_t>(std::max(n + 1, 0)));
  std::exception_ptr error;
  std::atomic<bool> failed{false};

  // Longest lengths first: they dominate the cost, so dynamic scheduling
  // keeps workers busy on the short ones afterwards.
#pragma omp parallel for schedule(dynamic, 1)
  for (int l = n; l >= 3; --l) {
    if (failed.load()) continue;
    try {
      found[l] = find_cycle_of_length(g, l, forbid, budget);
    } catch (...) {
#pragma omp critical(cubicycle_spectrum_error)
      if (!error) error = std::current_exception();
      failed.store(true);
    }
  }
  if (error) std::rethrow_exception(error);

  CycleSpectrum spec;
  spec.forbid = forbid;
  for (int l = 3; l <= n; ++l)
    if (found[l]) spec.witnesses.emplace(l, std::move(*found[l]));
  return spec;
}

CycleSpectrum cycle_spectrum(const Graph& g, std::optional<Vertex> forbid) {
  Budget budget;
  return cycle_spectrum(g, forbid, budget);
}

Cycle longest_cycle(const Graph& g, Budget& budget) {
  for (int l = g.order(); l >= 3; --l)
    if (auto c = find_cycle_of_length(g, l, std::nullopt, budget)) return *c;
  throw Acyclic("graph has no cycle");
}

int circumference(const Graph& g, Budget& budget) { return longest_cycle(g, budget).length(); }

int circumference(const Graph& g) {
  Budget budget;
  return circumference(g, budget);
}

BridgeSummary bridges_of(const Graph& g, const Cycle& c) {
  std::vector<char> keep(static_cast<std::size_t>(g.order()), 1);
  for (Vertex v : c.vertices) keep[v] = 0;
  const auto label = component_labels(g, keep);
  const int comps = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  BridgeSummary out;
  out.components.resize(static_cast<std::size_t>(comps));
  out.attachments.resize(static_cast<std::size_t>(comps));
  for (Vertex v = 0; v < g.order(); ++v) {
    if (label[v] < 0) continue;
    out.components[label[v]].push_back(v);
    for (Vertex w : g.neighbors(v))
      if (!keep[w]) out.attachments[label[v]].push_back(w);
  }
  for (auto& a : out.attachments) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return out;
}

bool satisfies_three_edge_conditions(const Graph& g, const Cycle& c, const Face& x) {
  const BridgeSummary b = bridges_of(g, c);
  for (std::size_t i = 0; i < b.components.size(); ++i) {
    const bool touches_x = std::any_of(b.components[i].begin(), b.components[i].end(),
                                       [&](Vertex v) { return x.contains_vertex(v); });
    const std::size_t cap = touches_x ? 2 : 3;
    if (b.attachments[i].size() > cap) return false;
  }
  return true;
}

Cycle tel_witness(const Graph& g, const Embedding& emb, const Face& x, Edge t, Edge y, Edge s,
                  Budget& budget) {
  (void)emb;
  for (Edge e : {t, y, s})
    if (!x.contains_edge(e)) throw std::invalid_argument("tel_witness: prescribed edge not on face");
  auto accept = [&](const Cycle& c) {
    return c.contains_edge(y) && c.contains_edge(s) && satisfies_three_edge_conditions(g, c, x);
  };
  for (int l = 3; l <= g.order(); ++l)
    if (auto c = find_with_prefix(g, l, std::nullopt, {t.u, t.v}, accept, budget))
      return canonical(*c);
  throw TheoremViolation("no cycle through the three edges meets the attachment conditions");
}

std::optional<Cycle> hamilton_cycle_through(const Graph& g, Edge e1, Edge e2, Edge avoid,
                                            Budget& budget) {
  Vertex centre;
  if (e2.has(e1.u))
    centre = e1.u;
  else if (e2.has(e1.v))
    centre = e1.v;
  else
    throw std::invalid_argument("hamilton_cycle_through: edges do not share a vertex");
  if (avoid == e1 || avoid == e2) throw std::invalid_argument("hamilton_cycle_through: avoided edge is prescribed");
  if (!g.adjacent(e1.u, e1.v) || !g.adjacent(e2.u, e2.v)) return std::nullopt;

  Graph reduced(g.order());
  for (const Edge& e : g.edges())
    if (e != avoid) reduced.add_edge(e.u, e.v);
  const std::vector<Vertex> prefix{e1.other(centre), centre, e2.other(centre)};
  auto c = find_with_prefix(reduced, g.order(), std::nullopt, prefix,
                            [](const Cycle&) { return true; }, budget);
  if (!c) return std::nullopt;
  return canonical(*c);
}

}  // namespace cubicycle
