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

#ifndef REPROLINT_QUALITY_H_
#define REPROLINT_QUALITY_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "reprolint/app_model.h"
#include "reprolint/device.h"
#include "reprolint/graph.h"
#include "reprolint/match_config.h"
#include "reprolint/resolve.h"
#include "reprolint/s2r.h"
#include "reprolint/text.h"

namespace reprolint {

struct AssessConfig {
  std::size_t depth = 6;              // n: graph levels searched per step
  std::size_t random_iterations = 3;  // y
  std::size_t random_steps = 10;      // x
  std::uint64_t seed = 42;
  // Systematic exploration budget used when no graph cache is supplied.
  std::size_t explore_budget = 1000;
  MatchConfig match = MatchConfig::Defaults();

  // Applies the keys of `doc` over `base`: depth, randomIterations,
  // randomSteps, seed, exploreBudget, match (a match config document) and
  // threshold. Throws ConfigError on unknown keys or bad values.
  static AssessConfig FromJson(const nlohmann::json& doc, AssessConfig base);
  static AssessConfig Load(const std::filesystem::path& path, AssessConfig base);
  // Throws ConfigError unless x >= 1 and the match config is valid.
  void Validate() const;
  // Every parameter that influences the result, including the seed.
  nlohmann::json Echo(std::string_view labeler) const;
};

// Resolution of one step on one graph vertex.
struct VertexResolution {
  int vertex = 0;
  std::size_t distance = 0;
  ResolutionResult result;
};

struct StepMatch {
  std::vector<VertexResolution> resolutions;  // every visited vertex
  int source = 0;                             // vertex of the chosen interaction
  std::size_t distance = 0;
  double score = 1.0;  // 1 / (d + 1)
  ResolvedInteraction interaction;
  // Exec order of the graph edge the interaction matched; absent for new ones.
  std::optional<std::uint64_t> exec_order;
  InputCounter counter;  // counter state after the chosen resolution

  const ResolutionResult& chosen() const;
};

struct MatchFailure {
  std::vector<VertexResolution> resolutions;
  int vertex = 0;  // where the reported failure occurred
  std::size_t distance = 0;
  ResolutionResult result;
};

// Resolves `step` on every vertex within cfg.depth levels of `current` and
// keeps the interaction with the highest 1/(d+1), ties by exec order. When
// `live` is given it replaces the stored screen of `current`. On failure the
// nearest multiple match wins over the nearest mismatch and is stored in
// `failure`.
std::optional<StepMatch> MatchStep(const ExecutionGraph& graph, int current, const S2R& step,
                                   const AssessConfig& cfg, const InputCounter& counter,
                                   const ScreenInstance* live = nullptr,
                                   MatchFailure* failure = nullptr);

// One interaction played on the device.
struct PlayedInteraction {
  int source_vertex = 0;
  int target_vertex = 0;
  ScreenInstance source;  // live screen before the event
  Event event;
  std::string component_id;
  std::string target_screen;
};

struct Execution {
  std::vector<PlayedInteraction> inferred;  // missing steps, in order
  PlayedInteraction matched;
  int reached = 0;
};

// Walks the shortest path from `current` to match.source, then plays the
// matched interaction, adding new screens and edges to `graph`. Path steps
// played before a failure are appended to `progress` when given.
// Throws DivergenceError when a screen differs from the graph's prediction or
// a path component is absent or disabled, and NoPathError when the source is
// unreachable.
Execution ExecuteAndInfer(DeviceSession& session, ExecutionGraph& graph, int current,
                          const StepMatch& match,
                          std::vector<PlayedInteraction>* progress = nullptr);

struct RandomStats {
  std::size_t iterations = 0;
  std::size_t interactions = 0;
};

// Up to y iterations of at most x random taps on not yet tapped clickable
// components (Layouts and Lists excluded). Each trace is merged into `graph`,
// the session is restored and the step is matched again from `current`.
std::optional<StepMatch> RandomExplore(DeviceSession& session, ExecutionGraph& graph,
                                       int current, const S2R& step, const AssessConfig& cfg,
                                       const InputCounter& counter, std::mt19937_64& rng,
                                       RandomStats* stats = nullptr,
                                       MatchFailure* failure = nullptr);

enum class AnnotationKind { kHQ, kAS, kVM, kMS };

std::string_view AnnotationName(AnnotationKind kind);  // "HQ", "AS", "VM", "MS"

// An interaction as shown to the reporter.
struct InteractionView {
  Event event;
  std::string component_id;
  std::string component_label;
  std::string source_screen;
  std::string target_screen;
  std::string wireframe_ref;
  std::string description;
};

struct FailedConstituent {
  std::string constituent;  // "action", "object" or "object2"
  std::string text;
};

struct Annotation {
  AnnotationKind kind = AnnotationKind::kHQ;
  std::vector<InteractionView> interactions;  // HQ: the match; MS: inferred steps
  std::vector<Candidate> candidates;          // AS
  std::vector<std::string> candidate_refs;    // AS: wireframe per candidate ("" if none)
  std::vector<FailedConstituent> failed;      // VM
  std::optional<std::size_t> distance;        // HQ
  std::optional<double> score;                // HQ
  std::string detail;
};

struct StepAssessment {
  S2R step;
  std::string sentence;
  Span span;
  std::vector<Annotation> annotations;  // MS first when present
};

struct ExplorationStats {
  std::size_t initial_vertices = 0;
  std::size_t initial_edges = 0;
  std::size_t final_vertices = 0;
  std::size_t final_edges = 0;
  std::size_t random_iterations = 0;
  std::size_t random_interactions = 0;
  std::size_t divergences = 0;
};

struct Diagnostics {
  std::size_t sentences = 0;
  std::vector<std::string> labels;
  std::vector<DroppedSentence> dropped;
  std::vector<std::size_t> unresolved_steps;  // AS/VM steps skipped for execution
  ExplorationStats exploration;
};

struct QualityReport {
  std::string report_id;
  std::string title;
  std::string app_name;
  std::vector<StepAssessment> steps;
  Diagnostics diagnostics;
  nlohmann::json config_echo;
  std::map<std::string, std::string> wireframes;  // ref -> SVG
};

// Full assessment of `report` against `model`, starting from `graph`.
// Uses PatternLabeler when `labeler` is null.
QualityReport Assess(const BugReport& report, const AppModel& model, const ExecutionGraph& graph,
                     const AssessConfig& cfg, S2RLabeler* labeler = nullptr);

// Graph built by systematic exploration within cfg.explore_budget.
ExecutionGraph ExploreGraph(const AppModel& model, std::size_t budget);

}  // namespace reprolint

#endif  // REPROLINT_QUALITY_H_
