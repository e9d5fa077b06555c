// Copyright 2026 The Reprolint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "reprolint/app_model.h"
#include "reprolint/error.h"
#include "reprolint/graph.h"
#include "reprolint/lexicon.h"
#include "reprolint/quality.h"
#include "reprolint/report.h"
#include "reprolint/s2r.h"
#include "reprolint/service.h"
#include "reprolint/store.h"
#include "reprolint/text.h"

namespace reprolint {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct AssessFlags {
  std::string report;
  std::string app;
  std::string graph_cache;
  std::string out = ".";
  std::string format = "both";
  std::size_t depth = 6;
  std::size_t rand_iters = 3;
  std::size_t rand_steps = 10;
  double threshold = 0.5;
  std::uint64_t seed = 42;
  std::string lexicon;
  std::string labels;
  std::string config;
};

struct ExploreFlags {
  std::string app;
  std::size_t budget = 1000;
  std::string out;
  std::uint64_t seed = 42;
};

struct ExtractFlags {
  std::string report;
  std::string labels;
  std::string lexicon;
};

struct ServeFlags {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string data_dir;
  std::size_t workers = 2;
  std::string config;
};

std::optional<Lexicon> LoadLexicon(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return Lexicon::WithOverrides(ReadFile(path));
}

std::optional<SidecarLabeler> LoadLabels(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return SidecarLabeler::FromText(ReadFile(path));
}

int RunAssess(const AssessFlags& f, const CLI::App& cmd) {
  AssessConfig cfg;
  if (!f.config.empty()) cfg = AssessConfig::Load(f.config, cfg);
  if (cmd.count("--depth")) cfg.depth = f.depth;
  if (cmd.count("--rand-iters")) cfg.random_iterations = f.rand_iters;
  if (cmd.count("--rand-steps")) cfg.random_steps = f.rand_steps;
  if (cmd.count("--threshold")) cfg.match.threshold = f.threshold;
  if (cmd.count("--seed")) cfg.seed = f.seed;
  cfg.Validate();

  const AppModel model = AppModel::Load(f.app);
  const std::string text = ReadFile(f.report);
  std::optional<Lexicon> lexicon = LoadLexicon(f.lexicon);
  std::optional<ScopedLexicon> scope;
  if (lexicon) scope.emplace(*lexicon);
  std::optional<SidecarLabeler> labels = LoadLabels(f.labels);

  std::optional<ExecutionGraph> graph;
  if (!f.graph_cache.empty()) {
    if (fs::exists(f.graph_cache)) {
      try {
        graph = ExecutionGraph::FromJson(json::parse(ReadFile(f.graph_cache)));
      } catch (const json::parse_error& e) {
        throw ModelError("graph cache: malformed JSON: " + std::string(e.what()));
      }
    } else {
      graph = ExploreGraph(model, cfg.explore_budget);
      WriteFileAtomic(f.graph_cache, graph->Serialize());
    }
  }

  AssessmentArtifacts out =
      RunAssessment(text, model, graph ? &*graph : nullptr, cfg, labels ? &*labels : nullptr);
  if (labels) labels->CheckExhausted();

  fs::create_directories(f.out);
  const std::string stem = fs::path(f.report).stem().string();
  if (f.format == "json" || f.format == "both") {
    fs::path path = fs::path(f.out) / (stem + ".quality.json");
    WriteFileAtomic(path, out.json);
    std::cout << path.string() << "\n";
  }
  if (f.format == "html" || f.format == "both") {
    fs::path path = fs::path(f.out) / (stem + ".quality.html");
    WriteFileAtomic(path, out.html);
    std::cout << path.string() << "\n";
  }
  return 0;
}

int RunExplore(const ExploreFlags& f) {
  const AppModel model = AppModel::Load(f.app);
  ExecutionGraph graph;
  if (fs::exists(f.out)) {
    try {
      graph = ExecutionGraph::FromJson(json::parse(ReadFile(f.out)));
    } catch (const json::parse_error& e) {
      throw ModelError("graph cache: malformed JSON: " + std::string(e.what()));
    }
  }
  graph.MergeTrace(SystematicExplore(model, f.budget));
  WriteFileAtomic(f.out, graph.Serialize());
  std::cout << f.out << ": " << graph.vertices().size() << " vertices, " << graph.edges().size()
            << " edges\n";
  return 0;
}

int RunExtract(const ExtractFlags& f) {
  std::optional<Lexicon> lexicon = LoadLexicon(f.lexicon);
  std::optional<ScopedLexicon> scope;
  if (lexicon) scope.emplace(*lexicon);
  BugReport report = ParseReport(ReadFile(f.report));
  std::optional<SidecarLabeler> sidecar = LoadLabels(f.labels);
  PatternLabeler patterns;
  S2RLabeler& labeler = sidecar ? static_cast<S2RLabeler&>(*sidecar) : patterns;
  ExtractedSteps steps = ExtractReportSteps(report, labeler);
  if (sidecar) sidecar->CheckExhausted();

  json out = {{"title", report.title}, {"labeler", labeler.name()}};
  json sentences = json::array();
  const auto all = report.sentences();
  for (std::size_t i = 0; i < all.size(); ++i) {
    sentences.push_back({{"text", all[i]->raw}, {"label", LabelName(steps.labels.at(i))}});
  }
  json s2rs = json::array();
  for (const S2R& s : steps.steps) {
    s2rs.push_back({{"tuple", s.ToString()}, {"sentenceIndex", s.sentence_index}});
  }
  json dropped = json::array();
  for (const DroppedSentence& d : steps.dropped) {
    dropped.push_back({{"sentenceIndex", d.sentence_index}, {"text", d.text}, {"reason", d.reason}});
  }
  out["sentences"] = std::move(sentences);
  out["s2rs"] = std::move(s2rs);
  out["dropped"] = std::move(dropped);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int RunServe(const ServeFlags& f) {
  Store store(f.data_dir.empty() ? Store::DefaultRoot() : fs::path(f.data_dir));
  Service::Options options;
  options.workers = f.workers;
  if (!f.config.empty()) options.defaults = AssessConfig::Load(f.config, options.defaults);
  Service service(store, options);
  const int port = service.Bind(f.host, f.port);
  if (port < 0) throw InputError("cannot bind " + f.host + ":" + std::to_string(f.port));
  std::cout << "serving on http://" << f.host << ":" << port << " (store " << store.root().string()
            << ")" << std::endl;
  service.Listen();
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"reprolint: quality linter for bug-report reproduction steps"};
  app.require_subcommand(1);

  AssessFlags af;
  CLI::App* assess = app.add_subcommand("assess", "Assess a bug report against an app model");
  assess->add_option("--report", af.report, "Bug report text file")->required()
      ->check(CLI::ExistingFile);
  assess->add_option("--app", af.app, "App model JSON")->required()->check(CLI::ExistingFile);
  assess->add_option("--graph-cache", af.graph_cache,
                     "Execution graph cache; created by exploration when missing");
  assess->add_option("--out", af.out, "Output directory")->capture_default_str();
  assess->add_option("--format", af.format, "Artifacts to write")
      ->check(CLI::IsMember({"json", "html", "both"}))
      ->capture_default_str();
  assess->add_option("--depth", af.depth, "Graph levels searched per step")->capture_default_str();
  assess->add_option("--rand-iters", af.rand_iters, "Random exploration iterations")
      ->capture_default_str();
  assess->add_option("--rand-steps", af.rand_steps, "Random steps per iteration")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  assess->add_option("--threshold", af.threshold, "Component similarity threshold")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  assess->add_option("--seed", af.seed, "Random exploration seed")->capture_default_str();
  assess->add_option("--lexicon", af.lexicon, "Extra lexicon entries (word/TAGS[/lemma])")
      ->check(CLI::ExistingFile);
  assess->add_option("--labels", af.labels, "Sentence labels, one B/I/O per line")
      ->check(CLI::ExistingFile);
  assess->add_option("--config", af.config, "Assessment config JSON")->check(CLI::ExistingFile);

  ExploreFlags ef;
  CLI::App* explore = app.add_subcommand("explore", "Build or extend an execution graph cache");
  explore->add_option("--app", ef.app, "App model JSON")->required()->check(CLI::ExistingFile);
  explore->add_option("--budget", ef.budget, "Maximum interactions")->capture_default_str();
  explore->add_option("--out", ef.out, "Graph cache file; merged into when present")->required();
  explore->add_option("--seed", ef.seed,
                      "Accepted for symmetry; systematic exploration is deterministic");

  ExtractFlags xf;
  CLI::App* extract = app.add_subcommand("extract", "Print the labels and steps of a report");
  extract->add_option("--report", xf.report, "Bug report text file")->required()
      ->check(CLI::ExistingFile);
  extract->add_option("--labels", xf.labels, "Sentence labels, one B/I/O per line")
      ->check(CLI::ExistingFile);
  extract->add_option("--lexicon", xf.lexicon, "Extra lexicon entries")->check(CLI::ExistingFile);

  ServeFlags sf;
  CLI::App* serve = app.add_subcommand("serve", "Run the HTTP API");
  serve->add_option("--host", sf.host, "Bind address")->capture_default_str();
  serve->add_option("--port", sf.port, "Port, 0 for any free one")->capture_default_str();
  serve->add_option("--data-dir", sf.data_dir, "Store root (default $REPROLINT_DATA_DIR)");
  serve->add_option("--workers", sf.workers, "Assessment worker threads")->capture_default_str();
  serve->add_option("--config", sf.config, "Default assessment config JSON")
      ->check(CLI::ExistingFile);

  CLI::App* config = app.add_subcommand("config", "Print the default assessment config");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  try {
    if (*assess) return RunAssess(af, *assess);
    if (*explore) return RunExplore(ef);
    if (*extract) return RunExtract(xf);
    if (*serve) return RunServe(sf);
    if (*config) {
      AssessConfig cfg;
      json doc = {{"depth", cfg.depth},
                  {"randomIterations", cfg.random_iterations},
                  {"randomSteps", cfg.random_steps},
                  {"seed", cfg.seed},
                  {"exploreBudget", cfg.explore_budget},
                  {"match", cfg.match.ToJson()}};
      std::cout << doc.dump(2) << "\n";
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "reprolint: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "reprolint: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}

}  // namespace
}  // namespace reprolint

int main(int argc, char** argv) { return reprolint::Main(argc, argv); }
