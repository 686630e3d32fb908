#include <algorithm>
#include <set>

#include "cubicycle/error.hpp"
#include "cubicycle/verify.hpp"

namespace cubicycle::verify {

std::string to_string(Phase p) {
  switch (p) {
    case Phase::small_cycles: return "small-cycles";
    case Phase::shortening: return "shortening";
    case Phase::lambda_extension: return "lambda-extension";
    case Phase::direct_search: return "direct-search";
    case Phase::spectrum: return "spectrum";
  }
  return "unknown";
}

HInstance make_h(const Graph& y, const Embedding& emb, Edge pair) {
  HInstance h;
  h.pair = pair;
  const std::vector<Vertex> removed{pair.u, pair.v};
  h.sub = delete_vertices(y, removed);
  h.embedding = emb.restrict_to(h.sub);
  h.exterior = exterior_face_of_H(h.sub.graph, h.embedding);
  for (Vertex v = 0; v < h.sub.graph.order(); ++v)
    if (h.sub.graph.degree(v) == 2) h.low.push_back(v);
  return h;
}

std::vector<int> required_lengths(int line_order) {
  std::vector<int> out;
  if (line_order >= 4) out.push_back(3);
  for (int l = 5; l <= line_order - 1; ++l) out.push_back(l);
  return out;
}

namespace {

Cycle to_base_labels(const HInstance& h, const Cycle& c) {
  Cycle out;
  for (Vertex v : c.vertices) out.vertices.push_back(h.sub.new_to_old[v]);
  return out;
}

struct LiftedWitness {
  Cycle c_g;
  SMap smap;
  LambdaSet lambda;
};

LiftedWitness lift_with_lambda(const LineGraph& lg, const Cycle& c_y) {
  LiftedWitness w;
  w.c_g = lift_cycle(lg, c_y);
  w.smap = compute_s_map(lg, w.c_g);
  w.lambda = maximal_lambda(w.smap, w.c_g);
  return w;
}

int lambda_requirement(int length) { return (length + 4) / 2; }  // ceil((l+3)/2)

// Each apex occurs once or twice, and twice exactly for apexes that are
// chords of c_y.
bool duplication_law(const LineGraph& lg, const Graph& y, const Cycle& c_y, const SMap& smap) {
  std::map<Vertex, int> count;
  for (Vertex s : smap.apex) ++count[s];
  std::set<Vertex> chord_vertices;
  for (const Edge& e : chords(y, c_y)) chord_vertices.insert(lg.map.edge_to_vertex(e));
  for (const auto& [s, k] : count) {
    if (k < 1 || k > 2) return false;
    if ((k == 2) != chord_vertices.contains(s)) return false;
  }
  // every chord must appear among the apexes
  for (Vertex s : chord_vertices)
    if (!count.contains(s)) return false;
  return true;
}

}  // namespace

VertexReplay replay_theorem_at(const Graph& y, const Embedding& emb, const LineGraph& lg,
                               Vertex v, Mode mode, Budget& budget) {
  const Graph& g = lg.graph;
  const int n = g.order();
  const std::vector<int> required = required_lengths(n);
  const std::set<int> required_set(required.begin(), required.end());

  VertexReplay r;
  r.v = v;
  std::set<int> produced;
  const bool phases_certify = mode == Mode::constructive;
  auto record = [&](const Cycle& c, Phase p) {
    const int l = c.length();
    if (!required_set.contains(l) || !is_valid_cycle(g, c, v)) return;
    produced.insert(l);
    if (phases_certify || p == Phase::spectrum) r.certified.try_emplace(l, canonical(c), p);
  };

  if (mode == Mode::oracle) {
    for (auto& [l, c] : cycle_spectrum(g, v, budget).witnesses) record(c, Phase::spectrum);
    produced.clear();
  }

  const Edge ev = lg.map.vertex_to_edge[v];

  // Triangles and short faces.
  for (Vertex yv = 0; yv < y.order(); ++yv)
    if (!ev.has(yv)) {
      const auto& t = lg.map.triangles[yv];
      record(Cycle{{t[0], t[1], t[2]}}, Phase::small_cycles);
      break;
    }
  const auto faces = emb.faces();
  bool five = false;
  for (const Face& f : faces)
    if (f.length() == 5 && !f.contains_edge(ev)) {
      record(lift_cycle(lg, Cycle{f.vertices()}), Phase::small_cycles);
      five = true;
      break;
    }
  if (!five) {
    for (const Face& f : faces) {
      if (f.length() != 4 || f.contains_edge(ev)) continue;
      const LiftedWitness w = lift_with_lambda(lg, Cycle{f.vertices()});
      for (int pos = 0; pos < w.c_g.length(); ++pos)
        if (!ev.has(w.smap.base_vertex[pos])) {
          const std::vector<int> one{pos};
          record(extend_by_lambda(w.smap, w.c_g, one), Phase::small_cycles);
          break;
        }
      break;
    }
  }

  // Hamilton cycle through two edges of v's triangle, then drop 2-triangle centres.
  {
    const auto& tri = lg.map.triangles[ev.u];
    std::vector<Vertex> others;
    for (Vertex x : tri)
      if (x != v) others.push_back(x);
    const Edge e1(v, others[0]), e2(v, others[1]), e3(others[0], others[1]);
    r.hamilton = hamilton_cycle_through(g, e1, e2, e3, budget);
    if (r.hamilton) {
      r.triangles = classify_triangles(lg, *r.hamilton);
      r.identities_hold = r.triangles->identities_hold(n);
      std::vector<int> order = r.triangles->two_triangles();
      auto own = std::find(order.begin(), order.end(), ev.u);
      if (own != order.end() && r.triangles->centres[ev.u] == v) {
        std::rotate(order.begin(), own, own + 1);
        for (std::size_t k = 1; k <= order.size(); ++k) {
          const std::span<const int> chosen(order.data(), k);
          record(shorten_by_centers(lg, *r.hamilton, *r.triangles, chosen), Phase::shortening);
        }
      }
    }
  }

  // Mid-range lengths from a cycle of H = Y - ends(v), extended through apexes.
  std::map<int, std::vector<int>> by_a;
  for (int l = 6; 3 * l < 2 * n; ++l) by_a[l / 3].push_back(l);
  if (!by_a.empty()) {
    const HInstance h = make_h(y, emb, ev);
    const Graph& hg = h.sub.graph;
    const std::vector<Vertex> low3(h.low.begin(), h.low.begin() + std::min<std::size_t>(3, h.low.size()));
    for (const auto& [a, lengths] : by_a) {
      const int lo = 2 * a, hi = std::min(3 * a, hg.order());
      std::optional<Cycle> pick;
      bool through_low = false;
      auto contains_low = [&](const Cycle& c) {
        return std::all_of(low3.begin(), low3.end(), [&](Vertex x) { return c.contains(x); });
      };
      auto meets_bound = [&](const Cycle& c) {
        const LiftedWitness w = lift_with_lambda(lg, to_base_labels(h, c));
        return static_cast<int>(w.lambda.positions.size()) >= lambda_requirement(c.length());
      };
      for (int l = lo; l <= hi && !pick; ++l) pick = find_cycle_if(hg, l, std::nullopt, contains_low, budget);
      through_low = pick.has_value();
      for (int l = lo; l <= hi && !pick; ++l) pick = find_cycle_if(hg, l, std::nullopt, meets_bound, budget);
      for (int l = lo; l <= hi && !pick; ++l) pick = find_cycle_of_length(hg, l, std::nullopt, budget);
      if (!pick) continue;

      LambdaRecord lr;
      lr.a = a;
      lr.c_h = to_base_labels(h, *pick);
      lr.through_low_vertices = through_low;
      const LiftedWitness w = lift_with_lambda(lg, lr.c_h);
      lr.length = w.c_g.length();
      lr.lambda_size = static_cast<int>(w.lambda.positions.size());
      lr.required = lambda_requirement(lr.length);
      lr.chord_count = static_cast<int>(chords(y, lr.c_h).size());
      lr.duplication_law = duplication_law(lg, y, lr.c_h, w.smap);
      lr.bound_holds = lr.lambda_size >= lr.required;

      bool ext_ok = is_valid_cycle(g, w.c_g, v);
      auto try_extension = [&](std::span<const int> subset) {
        const Cycle ext = extend_by_lambda(w.smap, w.c_g, subset);
        ext_ok = ext_ok && ext.length() == lr.length + static_cast<int>(subset.size()) &&
                 is_valid_cycle(g, ext, v);
      };
      for (int pos : w.lambda.positions) try_extension(std::span<const int>(&pos, 1));
      try_extension(w.lambda.positions);
      lr.extensions_valid = ext_ok;

      for (int l : lengths) {
        const int extra = l - lr.length;
        if (extra < 0 || extra > lr.lambda_size) continue;
        const std::span<const int> chosen(w.lambda.positions.data(), static_cast<std::size_t>(extra));
        record(extend_by_lambda(w.smap, w.c_g, chosen), Phase::lambda_extension);
      }
      r.lambda.push_back(std::move(lr));
    }
  }

  for (int l : required) {
    if (!produced.contains(l)) r.replay_gaps.push_back(l);
    if (r.certified.contains(l)) continue;
    if (auto c = find_cycle_of_length(g, l, v, budget)) {
      r.certified.try_emplace(l, canonical(*c), Phase::direct_search);
    } else {
      r.missing.push_back(l);
    }
  }
  return r;
}

}  // namespace cubicycle::verify
