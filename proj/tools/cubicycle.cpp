#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cubicycle/corpus.hpp"
#include "cubicycle/error.hpp"
#include "cubicycle/fixtures.hpp"
#include "cubicycle/verify.hpp"

using namespace cubicycle;
namespace cv = cubicycle::verify;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kBudget = 3 };

struct CorpusFlags {
  std::vector<std::string> inputs;
  std::string format = "auto";
  std::string verify;
  std::string mode = "constructive";
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 1;
  int max_pairs = -1;
  int max_vertices = -1;
  std::string json;
  std::string csv;
  bool no_timings = false;
};

struct SuiteFlags {
  int count = 10000;
  int max_n = 9;
  std::uint64_t seed = 1;
  int exhaustive = 0;
  std::uint64_t budget = kDefaultBudget;
  std::string json;
};

void add_corpus_flags(CLI::App* app, CorpusFlags& f, bool with_verify) {
  app->add_option("--input", f.inputs, "corpus file (repeatable); built-in fixtures when omitted");
  app->add_option("--format", f.format, "graph6 | planar_code | auto")
      ->check(CLI::IsMember({"graph6", "planar_code", "auto"}));
  if (with_verify) app->add_option("--verify", f.verify, "comma-separated checks, or all");
  app->add_option("--mode", f.mode, "constructive | oracle")->check(CLI::IsMember({"constructive", "oracle"}));
  app->add_option("--budget", f.budget, "node-expansion budget per task");
  app->add_option("--seed", f.seed, "seed recorded in the report");
  app->add_option("--max-pairs", f.max_pairs, "adjacent pairs of Y examined per graph");
  app->add_option("--max-vertices", f.max_vertices, "vertices of L(Y) examined per graph");
  app->add_option("--json", f.json, "write JSON lines here instead of stdout");
  app->add_option("--csv", f.csv, "write a CSV summary here");
  app->add_flag("--no-timings", f.no_timings, "omit the timings field");
}

std::ostream* open_output(const std::string& path, std::unique_ptr<std::ofstream>& holder) {
  if (path.empty() || path == "-") return &std::cout;
  holder = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*holder) throw std::runtime_error("cannot write " + path);
  return holder.get();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

int run_corpus(const CorpusFlags& f, const std::set<cv::Check>& checks) {
  cv::Options opt;
  opt.checks = checks;
  opt.mode = f.mode == "oracle" ? cv::Mode::oracle : cv::Mode::constructive;
  opt.budget = f.budget;
  opt.seed = f.seed;
  if (f.max_pairs >= 0) opt.max_pairs = f.max_pairs;
  if (f.max_vertices >= 0) opt.max_vertices = f.max_vertices;
  opt.timings = !f.no_timings;

  const CorpusFormat fmt = f.format == "graph6"        ? CorpusFormat::graph6
                           : f.format == "planar_code" ? CorpusFormat::planar_code
                                                       : CorpusFormat::automatic;
  std::vector<CorpusItem> items;
  if (f.inputs.empty()) {
    items = builtin_corpus();
  } else {
    for (const std::string& path : f.inputs) {
      auto part = load_corpus(path, fmt);
      std::move(part.begin(), part.end(), std::back_inserter(items));
    }
  }

  std::unique_ptr<std::ofstream> json_file, csv_file;
  std::ostream* out = open_output(f.json, json_file);
  std::ostream* csv = f.csv.empty() ? nullptr : open_output(f.csv, csv_file);
  std::vector<cv::Check> ordered(checks.begin(), checks.end());
  if (csv) {
    *csv << "file,ordinal,name,n,status";
    for (cv::Check c : ordered) *csv << ',' << cv::to_string(c);
    *csv << '\n';
  }

  bool failure = false, budget = false;
  for (CorpusItem& item : items) {
    const cv::GraphReport rep = cv::verify_item(item, opt);
    failure = failure || rep.failure;
    budget = budget || rep.budget_exceeded;
    *out << rep.record.dump() << '\n';
    if (csv) {
      const auto& rec = rep.record;
      *csv << csv_field(item.file) << ',' << item.ordinal << ',' << csv_field(item.name) << ','
           << item.graph.order() << ',' << csv_field(rec["status"].get<std::string>());
      for (cv::Check c : ordered) {
        const std::string key = cv::to_string(c);
        *csv << ',' << (rec["checks"].contains(key) ? rec["checks"][key]["verdict"].get<std::string>() : "");
      }
      *csv << '\n';
    }
  }
  out->flush();
  if (failure) return kFailure;
  if (budget) return kBudget;
  return kOk;
}

int emit_suite(const cv::Json& j, const std::string& path) {
  std::unique_ptr<std::ofstream> holder;
  *open_output(path, holder) << j.dump() << '\n';
  return j["verdict"] == "pass" ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle-spectrum verification for line graphs of cubic plane graphs"};
  app.require_subcommand(1);

  CorpusFlags check_f, prop_f, thm_f, tight_f;
  auto* check = app.add_subcommand("check", "run the selected checks over a corpus");
  add_corpus_flags(check, check_f, true);
  check_f.verify = "all";
  auto* prop = app.add_subcommand("verify-proposition", "short cycles above every even k in each H");
  add_corpus_flags(prop, prop_f, false);
  auto* thm = app.add_subcommand("verify-theorem", "vertex-avoiding cycles of every required length");
  add_corpus_flags(thm, thm_f, false);
  auto* tight = app.add_subcommand("tightness-scan", "m(k)/k over even k on Y and each H");
  add_corpus_flags(tight, tight_f, false);

  SuiteFlags lemma_f, tel_f;
  tel_f.max_n = 6;
  auto* lemma = app.add_subcommand("verify-lemma", "acyclic spanning subdigraph on random digraphs");
  lemma->add_option("--count", lemma_f.count, "random digraphs");
  lemma->add_option("--max-n", lemma_f.max_n, "largest order");
  lemma->add_option("--seed", lemma_f.seed, "generator seed");
  lemma->add_option("--exhaustive", lemma_f.exhaustive, "also enumerate every digraph up to this order");
  lemma->add_option("--json", lemma_f.json, "output path");
  auto* tel = app.add_subcommand("verify-tel", "three-edge witnesses on small 2-connected plane graphs");
  tel->add_option("--max-n", tel_f.max_n, "largest order (at most 6)");
  tel->add_option("--budget", tel_f.budget, "node-expansion budget");
  tel->add_option("--json", tel_f.json, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return run_corpus(check_f, cv::parse_check_list(check_f.verify));
    if (*prop) return run_corpus(prop_f, {cv::Check::proposition, cv::Check::circumference_bound});
    if (*thm)
      return run_corpus(thm_f, {cv::Check::theorem, cv::Check::triangle_identities, cv::Check::lambda_bound});
    if (*tight) return run_corpus(tight_f, {cv::Check::tightness});
    if (*lemma)
      return emit_suite(cv::to_json(cv::run_lemma_suite(lemma_f.count, lemma_f.max_n, lemma_f.seed,
                                                        lemma_f.exhaustive)),
                        lemma_f.json);
    if (*tel) {
      Budget budget(tel_f.budget);
      cv::TelSuiteResult r = cv::run_tel_suite(tel_f.max_n, budget);
      for (const NamedGraph& ng : fixtures::builtin()) {
        const cv::TelSuiteResult f = cv::run_tel_on(ng.graph.graph, ng.graph.embedding, budget);
        r.graphs += f.graphs;
        r.embeddings += f.embeddings;
        r.faces += f.faces;
        r.triples += f.triples;
        r.passed += f.passed;
        r.failures.insert(r.failures.end(), f.failures.begin(), f.failures.end());
      }
      return emit_suite(cv::to_json(r), tel_f.json);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
