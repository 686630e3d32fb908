#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "cubicycle/budget.hpp"
#include "cubicycle/constructions.hpp"
#include "cubicycle/corpus.hpp"
#include "cubicycle/cycles.hpp"

namespace cubicycle::verify {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Check {
  proposition,
  theorem,
  triangle_identities,
  lambda_bound,
  circumference_bound,
  tel_oracle,
  tightness,
};

/// "proposition", "theorem", "triangle-identities", "lambda-bound",
/// "circumference-bound", "tel-oracle", "tightness".
std::string to_string(Check c);
/// Accepts the names above plus "all" (everything except tightness).
/// Throws std::invalid_argument.
std::set<Check> parse_check_list(const std::string& list);

enum class Mode { constructive, oracle };

struct Options {
  std::set<Check> checks;
  Mode mode = Mode::constructive;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 1;
  std::optional<int> max_pairs;
  std::optional<int> max_vertices;
  bool timings = true;
};

enum class Verdict { pass, fail, skipped, budget_exceeded };
std::string to_string(Verdict v);

struct CheckResult {
  Verdict verdict = Verdict::pass;
  Json details = Json::object();
};

struct Predicates {
  int n = 0, m = 0;
  bool cubic = false;
  bool connected = false;
  bool planar = false;
  bool three_connected = false;
  bool cyclically_4ec = false;
  int girth = kInfiniteGirth;

  /// nullopt when the graph qualifies; otherwise "not cubic" etc.
  std::optional<std::string> skip_reason() const;
};

/// Computes predicates and fills in a planar embedding when one is missing.
Predicates evaluate_predicates(CorpusItem& item);

// ---------------------------------------------------------------------------
// Per-H analysis: H = Y - {u, v} for an edge uv of Y.
// ---------------------------------------------------------------------------

struct HInstance {
  Edge pair;
  InducedSubgraph sub;
  Embedding embedding;
  Face exterior;
  /// degree-2 vertices of H in ascending order
  std::vector<Vertex> low;
};

HInstance make_h(const Graph& y, const Embedding& emb, Edge pair);

/// Edges of Y in lexicographic order, truncated to the sampling limit.
std::vector<Edge> sampled_pairs(const CorpusItem& item, const Options& opt);
std::vector<Vertex> sampled_line_vertices(const CorpusItem& item, int line_order,
                                          const Options& opt);

// ---------------------------------------------------------------------------
// Vertex-avoiding cycles for one vertex of L(Y), by construction phase
// ---------------------------------------------------------------------------

enum class Phase { small_cycles, shortening, lambda_extension, direct_search, spectrum };
std::string to_string(Phase p);

struct LambdaRecord {
  int a = 0;
  int length = 0;
  int lambda_size = 0;
  int required = 0;  // ceil((length + 3) / 2)
  int chord_count = 0;
  bool through_low_vertices = false;
  bool duplication_law = false;
  bool bound_holds = false;
  bool extensions_valid = false;
  Cycle c_h;  // in Y's labels
};

struct VertexReplay {
  Vertex v = 0;
  std::map<int, std::pair<Cycle, Phase>> certified;
  std::vector<int> missing;
  std::optional<Cycle> hamilton;
  std::optional<TriangleClassification> triangles;
  bool identities_hold = false;
  std::vector<LambdaRecord> lambda;
  /// lengths the construction phases did not produce (filled by direct search)
  std::vector<int> replay_gaps;
};

/// L(y) lengths l in {3} U {5..n-1} that must avoid each vertex.
std::vector<int> required_lengths(int line_order);

VertexReplay replay_theorem_at(const Graph& y, const Embedding& emb, const LineGraph& lg,
                               Vertex v, Mode mode, Budget& budget);

// ---------------------------------------------------------------------------
// Checks over one qualifying corpus item
// ---------------------------------------------------------------------------

struct GraphReport {
  Json record;
  bool failure = false;
  bool budget_exceeded = false;
};

/// One JSON record for the item, running every check in opt.checks.
GraphReport verify_item(CorpusItem& item, const Options& opt);

/// m(k) = shortest cycle length >= k for each even k in [4, circumference].
struct TightnessRow {
  int k = 0;
  int m = 0;
};
std::vector<TightnessRow> tightness_rows(const CycleSpectrum& spec);

// ---------------------------------------------------------------------------
// Corpus-free suites
// ---------------------------------------------------------------------------

struct LemmaSuiteResult {
  int random_count = 0;
  int random_passed = 0;
  int exhaustive_count = 0;
  int exhaustive_passed = 0;
  std::vector<std::string> failures;
};

/// `count` seeded random loop-free digraphs on 1..max_n vertices with up to
/// two parallel arcs per ordered pair; plus, when exhaustive_n > 0, every
/// digraph on 1..exhaustive_n vertices with multiplicities 0..2.
LemmaSuiteResult run_lemma_suite(int count, int max_n, std::uint64_t seed, int exhaustive_n);
Json to_json(const LemmaSuiteResult& r);

struct TelSuiteResult {
  int graphs = 0;
  int embeddings = 0;
  int faces = 0;
  int triples = 0;
  int passed = 0;
  std::vector<std::string> failures;
};

/// Every non-isomorphic 2-connected planar graph on 3..max_n vertices, in
/// each of its plane embeddings, every face, every 3-subset of the face's edges.
TelSuiteResult run_tel_suite(int max_n, Budget& budget);
/// All faces and all edge triples of one embedded graph.
TelSuiteResult run_tel_on(const Graph& g, const Embedding& emb, Budget& budget);
Json to_json(const TelSuiteResult& r);

/// Hex FNV-1a digest over the vertex sequences of the given cycles.
std::string digest(const std::vector<Cycle>& cycles);

}  // namespace cubicycle::verify
