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

#include "reprolint/quality.h"

#include <fstream>
#include <limits>
#include <set>
#include <utility>

#include "reprolint/error.h"
#include "reprolint/hash.h"
#include "reprolint/wireframe.h"

namespace reprolint {
namespace {

using Outcome = ResolutionResult::Outcome;

constexpr std::uint64_t kNewInteraction = std::numeric_limits<std::uint64_t>::max();

// Visible name; unlabeled containers borrow their first labeled descendant.
std::string LabelOf(const GuiComponent& c) {
  if (!c.label.empty()) return c.label;
  if (!c.description.empty()) return c.description;
  for (const GuiComponent& child : c.children) {
    std::string inner = LabelOf(child);
    if (inner != child.id) return inner;
  }
  return c.id;
}

std::string Surfaces(const std::vector<Token>& tokens) {
  std::string out;
  for (const Token& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.surface;
  }
  return out;
}

std::string Describe(const Event& event, const std::string& label) {
  const std::string quoted = "\"" + label + "\"";
  switch (event.kind) {
    case EventKind::kTap: return "Tap " + quoted;
    case EventKind::kLongTap: return "Long-tap " + quoted;
    case EventKind::kTapMenu: return "Tap the menu " + quoted;
    case EventKind::kType: return "Type \"" + event.input.value_or("") + "\" into " + quoted;
    case EventKind::kOpenApp: return "Open the app";
    case EventKind::kTapBack: return "Press back";
    case EventKind::kSwipeUp: return "Swipe up";
    case EventKind::kSwipeDown: return "Swipe down";
    case EventKind::kSwipeLeft: return "Swipe left";
    case EventKind::kSwipeRight: return "Swipe right";
    case EventKind::kRotateLandscape: return "Rotate to landscape";
    case EventKind::kRotatePortrait: return "Rotate to portrait";
  }
  return std::string(EventKindName(event.kind));
}

// Registers the wireframe of `screen` with `highlight` outlined.
std::string AddWireframe(QualityReport& qr, const ScreenInstance& screen,
                         const std::string& highlight) {
  std::string svg = RenderWireframe(screen, highlight);
  std::string ref = WireframeRef(svg);
  qr.wireframes.emplace(ref, std::move(svg));
  return ref;
}

InteractionView View(QualityReport& qr, const ScreenInstance& source, const Event& event,
                     const std::string& component_id, const std::string& target_screen,
                     const ScreenInstance* shown = nullptr) {
  InteractionView v;
  v.event = event;
  v.component_id = component_id;
  if (const GuiComponent* c = component_id.empty() ? nullptr : source.Find(component_id)) {
    v.component_label = LabelOf(*c);
  }
  v.source_screen = source.name;
  v.target_screen = target_screen;
  v.wireframe_ref = AddWireframe(qr, shown ? *shown : source, component_id);
  v.description = Describe(event, v.component_label);
  return v;
}

InteractionView View(QualityReport& qr, const PlayedInteraction& p) {
  return View(qr, p.source, p.event, p.component_id, p.target_screen);
}

std::string ConstituentText(const S2R& step, const std::string& constituent) {
  if (constituent == "object") return Surfaces(step.object);
  if (constituent == "object2") return Surfaces(step.object2);
  return step.action;
}

ResolutionResult DivergedResult(const S2R& step) {
  ResolutionResult r;
  r.outcome = Outcome::kMismatch;
  r.failed.push_back(step.object.empty() ? "action" : "object");
  r.detail = "execution diverged from the execution model";
  return r;
}

}  // namespace

AssessConfig AssessConfig::FromJson(const nlohmann::json& doc, AssessConfig base) {
  if (!doc.is_object()) throw ConfigError("assessment config: expected an object");
  auto count = [](const nlohmann::json& v, const std::string& key) -> std::uint64_t {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
      throw ConfigError("assessment config: " + key + " must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
  };
  if (auto it = doc.find("match"); it != doc.end()) base.match = MatchConfig::FromJson(*it);
  for (const auto& [key, value] : doc.items()) {
    if (key == "depth") {
      base.depth = count(value, key);
    } else if (key == "randomIterations") {
      base.random_iterations = count(value, key);
    } else if (key == "randomSteps") {
      base.random_steps = count(value, key);
    } else if (key == "seed") {
      base.seed = count(value, key);
    } else if (key == "exploreBudget") {
      base.explore_budget = count(value, key);
    } else if (key == "threshold") {
      if (!value.is_number()) throw ConfigError("assessment config: threshold must be a number");
      base.match.threshold = value.get<double>();
    } else if (key != "match") {
      throw ConfigError("assessment config: unknown key \"" + key + "\"");
    }
  }
  base.Validate();
  return base;
}

AssessConfig AssessConfig::Load(const std::filesystem::path& path, AssessConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  try {
    return FromJson(nlohmann::json::parse(in), std::move(base));
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("assessment config: malformed JSON: " + std::string(e.what()));
  }
}

void AssessConfig::Validate() const {
  if (random_steps < 1) throw ConfigError("random steps per iteration must be at least 1");
  match.Validate();
}

nlohmann::json AssessConfig::Echo(std::string_view labeler) const {
  nlohmann::json echo;
  echo["depth"] = depth;
  echo["randomIterations"] = random_iterations;
  echo["randomSteps"] = random_steps;
  echo["threshold"] = match.threshold;
  echo["seed"] = seed;
  echo["exploreBudget"] = explore_budget;
  echo["labeler"] = std::string(labeler);
  echo["matchConfigHash"] = ShortHash(match.ToJson().dump());
  return echo;
}

const ResolutionResult& StepMatch::chosen() const {
  for (const VertexResolution& r : resolutions) {
    if (r.vertex == source && r.result.outcome == Outcome::kResolved) return r.result;
  }
  throw Error("step match has no chosen resolution");
}

std::optional<StepMatch> MatchStep(const ExecutionGraph& graph, int current, const S2R& step,
                                   const AssessConfig& cfg, const InputCounter& counter,
                                   const ScreenInstance* live, MatchFailure* failure) {
  std::vector<VertexResolution> resolutions;
  std::optional<StepMatch> best;
  std::uint64_t best_order = kNewInteraction;
  for (const auto& [v, d] : graph.Neighborhood(current, cfg.depth)) {
    const ScreenInstance& screen = v == current && live ? *live : graph.vertex(v).screen;
    InputCounter local = counter;
    ResolutionResult r = ResolveStep(step, screen, cfg.match, local);
    if (r.outcome == Outcome::kResolved) {
      const ResolvedInteraction& ri = r.interaction;
      std::uint64_t order = kNewInteraction;
      const std::string cls = ri.event.input ? InputClass(*ri.event.input) : "";
      for (const Edge* e : graph.FindEdges(v, ri.event.kind, ri.component_id)) {
        if (order == kNewInteraction || e->input_class == cls) order = e->exec_order;
        if (e->input_class == cls) break;
      }
      if (!best || d < best->distance || (d == best->distance && order < best_order)) {
        best.emplace();
        best->source = v;
        best->distance = d;
        best->score = 1.0 / (static_cast<double>(d) + 1.0);
        best->interaction = ri;
        if (order != kNewInteraction) best->exec_order = order;
        best->counter = local;
        best_order = order;
      }
    }
    resolutions.push_back({v, d, std::move(r)});
  }
  if (best) {
    best->resolutions = std::move(resolutions);
    return best;
  }
  if (failure) {
    // Nearest multiple match, else the nearest mismatch.
    const VertexResolution* pick = nullptr;
    for (const VertexResolution& r : resolutions) {
      if (r.result.outcome == Outcome::kMultipleMatch) {
        pick = &r;
        break;
      }
    }
    if (!pick && !resolutions.empty()) pick = &resolutions.front();
    failure->vertex = pick ? pick->vertex : current;
    failure->distance = pick ? pick->distance : 0;
    failure->result = pick ? pick->result : ResolutionResult{};
    failure->resolutions = std::move(resolutions);
  }
  return std::nullopt;
}

Execution ExecuteAndInfer(DeviceSession& session, ExecutionGraph& graph, int current,
                          const StepMatch& match, std::vector<PlayedInteraction>* progress) {
  Execution out;
  for (const Edge& e : graph.ShortestPath(current, match.source)) {
    ScreenInstance source = session.current();
    if (Signature(source) != graph.vertex(e.source).signature) {
      throw DivergenceError("device is not on the predicted screen of vertex " +
                            std::to_string(e.source));
    }
    if (RequiresComponent(e.event)) {
      const GuiComponent* c = source.Find(e.component_id);
      if (!c || !c->flags.enabled) {
        throw DivergenceError("component \"" + e.component_id + "\" is not enabled on " +
                              source.name);
      }
    }
    try {
      session.Execute(e.event_value(), e.component_id);
    } catch (const IllegalEventError& err) {
      throw DivergenceError(err.what());
    }
    PlayedInteraction p{e.source, e.target, std::move(source), e.event_value(), e.component_id,
                        session.current().name};
    const bool diverged = Signature(session.current()) != graph.vertex(e.target).signature;
    if (diverged) p.target_vertex = graph.AddScreen(session.current());
    if (progress) progress->push_back(p);
    out.inferred.push_back(std::move(p));
    if (diverged) {
      throw DivergenceError("screen " + session.current().name + " differs from vertex " +
                            std::to_string(e.target));
    }
  }
  ScreenInstance source = session.current();
  if (Signature(source) != graph.vertex(match.source).signature) {
    throw DivergenceError("device is not on the screen where the step matched");
  }
  const ResolvedInteraction& ri = match.interaction;
  try {
    session.Execute(ri.event, ri.component_id);
  } catch (const IllegalEventError& err) {
    throw DivergenceError(err.what());
  }
  out.reached = graph.AddScreen(session.current());
  graph.AddInteraction(match.source, out.reached, ri.event, ri.component_id);
  out.matched = {match.source, out.reached, std::move(source), ri.event, ri.component_id,
                 session.current().name};
  return out;
}

std::optional<StepMatch> RandomExplore(DeviceSession& session, ExecutionGraph& graph,
                                       int current, const S2R& step, const AssessConfig& cfg,
                                       const InputCounter& counter, std::mt19937_64& rng,
                                       RandomStats* stats, MatchFailure* failure) {
  std::set<std::pair<std::string, std::string>> tapped;  // (signature, component)
  for (std::size_t it = 0; it < cfg.random_iterations; ++it) {
    const Checkpoint checkpoint = session.Capture();
    Trace trace;
    for (std::size_t s = 0; s < cfg.random_steps; ++s) {
      const ScreenInstance& screen = session.current();
      const std::string sig = Signature(screen);
      std::vector<const GuiComponent*> options;
      for (const GuiComponent* c : screen.Components()) {
        const ComponentFlags& f = c->flags;
        if (!f.enabled || !(f.tappable || f.checkable || f.pickable)) continue;
        if (c->type == ComponentType::kLayout || c->type == ComponentType::kList) continue;
        if (tapped.contains({sig, c->id})) continue;
        options.push_back(c);
      }
      if (options.empty()) break;
      const std::string id = options[rng() % options.size()]->id;
      tapped.insert({sig, id});
      ScreenInstance source = screen;
      session.Execute({EventKind::kTap, std::nullopt}, id);
      trace.push_back({std::move(source), {EventKind::kTap, std::nullopt}, id, session.current()});
    }
    graph.MergeTrace(trace);
    session.Restore(checkpoint);
    if (stats) {
      ++stats->iterations;
      stats->interactions += trace.size();
    }
    if (auto m = MatchStep(graph, current, step, cfg, counter, &session.current(), failure)) {
      return m;
    }
  }
  return std::nullopt;
}

std::string_view AnnotationName(AnnotationKind kind) {
  switch (kind) {
    case AnnotationKind::kHQ: return "HQ";
    case AnnotationKind::kAS: return "AS";
    case AnnotationKind::kVM: return "VM";
    case AnnotationKind::kMS: return "MS";
  }
  return "?";
}

ExecutionGraph ExploreGraph(const AppModel& model, std::size_t budget) {
  ExecutionGraph graph;
  graph.MergeTrace(SystematicExplore(model, budget));
  return graph;
}

QualityReport Assess(const BugReport& report, const AppModel& model, const ExecutionGraph& graph,
                     const AssessConfig& cfg, S2RLabeler* labeler) {
  cfg.Validate();
  AssessConfig config = cfg;
  config.match.AddAppNames(model);
  PatternLabeler patterns;
  if (!labeler) labeler = &patterns;

  BugReport parsed = report;
  ExtractedSteps extracted = ExtractReportSteps(parsed, *labeler);
  const std::vector<const Sentence*> sentences = parsed.sentences();

  QualityReport qr;
  qr.title = parsed.title;
  qr.app_name = model.app_name();
  qr.config_echo = cfg.Echo(labeler->name());
  qr.report_id = ShortHash(parsed.title + "\n" + parsed.body + '\0' + model.CanonicalText() +
                           '\0' + qr.config_echo.dump());
  Diagnostics& diag = qr.diagnostics;
  diag.sentences = sentences.size();
  for (SentenceLabel l : extracted.labels) diag.labels.emplace_back(LabelName(l));
  diag.dropped = extracted.dropped;

  ExecutionGraph g = graph;
  diag.exploration.initial_vertices = g.vertices().size();
  diag.exploration.initial_edges = g.edges().size();

  DeviceSession session(model);
  InputCounter counter;
  std::mt19937_64 rng(cfg.seed);
  RandomStats random;

  const Event open{EventKind::kOpenApp, std::nullopt};
  const ScreenInstance launcher = session.current();
  session.Execute(open, "");
  int current = g.AddScreen(session.current());
  g.AddInteraction(ExecutionGraph::kStart, current, open, "");

  for (std::size_t i = 0; i < extracted.steps.size(); ++i) {
    const S2R& step = extracted.steps[i];
    StepAssessment sa;
    sa.step = step;
    if (step.sentence_index < sentences.size()) {
      sa.sentence = sentences[step.sentence_index]->raw;
      sa.span = sentences[step.sentence_index]->span;
    }

    if (i == 0) {
      // The launch already happened; an opening step is analyzed against it.
      InputCounter probe = counter;
      ResolutionResult r = ResolveStep(step, launcher, config.match, probe);
      if (r.outcome == Outcome::kResolved && r.interaction.event.kind == EventKind::kOpenApp) {
        Annotation hq;
        hq.kind = AnnotationKind::kHQ;
        hq.interactions.push_back(
            View(qr, launcher, open, "", session.current().name, &session.current()));
        hq.distance = 0;
        hq.score = 1.0;
        hq.detail = r.detail;
        sa.annotations.push_back(std::move(hq));
        qr.steps.push_back(std::move(sa));
        continue;
      }
    }

    const Checkpoint checkpoint = session.Capture();
    const int start = current;
    MatchFailure failure;
    std::optional<StepMatch> match =
        MatchStep(g, current, step, config, counter, &session.current(), &failure);
    if (!match) {
      match = RandomExplore(session, g, current, step, config, counter, rng, &random, &failure);
    }

    std::optional<Execution> exec;
    std::vector<PlayedInteraction> played;
    if (match) {
      try {
        exec = ExecuteAndInfer(session, g, current, *match, &played);
      } catch (const Error&) {
        // One re-match from wherever the device actually is.
        ++diag.exploration.divergences;
        const int here = g.AddScreen(session.current());
        match = MatchStep(g, here, step, config, counter, &session.current(), &failure);
        if (match) {
          try {
            exec = ExecuteAndInfer(session, g, here, *match, &played);
          } catch (const Error&) {
            failure.vertex = here;
            failure.result = DivergedResult(step);
          }
        }
      }
    }

    if (exec) {
      counter = match->counter;
      current = exec->reached;
      if (!played.empty()) {
        Annotation ms;
        ms.kind = AnnotationKind::kMS;
        for (const PlayedInteraction& p : played) ms.interactions.push_back(View(qr, p));
        sa.annotations.push_back(std::move(ms));
      }
      Annotation hq;
      hq.kind = AnnotationKind::kHQ;
      hq.interactions.push_back(View(qr, exec->matched));
      hq.distance = match->distance;
      hq.score = match->score;
      hq.detail = match->chosen().detail;
      sa.annotations.push_back(std::move(hq));
    } else {
      session.Restore(checkpoint);
      current = start;
      const ResolutionResult& r = failure.result;
      Annotation a;
      a.detail = r.detail;
      if (r.outcome == Outcome::kMultipleMatch) {
        a.kind = AnnotationKind::kAS;
        const ScreenInstance& screen =
            failure.vertex == current ? session.current() : g.vertex(failure.vertex).screen;
        for (const Candidate& c : r.candidates) {
          a.candidates.push_back(c);
          a.candidate_refs.push_back(AddWireframe(qr, screen, c.component_id));
        }
      } else {
        a.kind = AnnotationKind::kVM;
        std::vector<std::string> failed = r.failed;
        if (failed.empty()) failed.push_back("action");
        for (const std::string& f : failed) a.failed.push_back({f, ConstituentText(step, f)});
      }
      sa.annotations.push_back(std::move(a));
      diag.unresolved_steps.push_back(i);
    }
    qr.steps.push_back(std::move(sa));
  }

  diag.exploration.final_vertices = g.vertices().size();
  diag.exploration.final_edges = g.edges().size();
  diag.exploration.random_iterations = random.iterations;
  diag.exploration.random_interactions = random.interactions;
  return qr;
}

}  // namespace reprolint
