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

#include "reprolint/graph.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "reprolint/device.h"
#include "reprolint/error.h"
#include "reprolint/wireframe.h"

namespace reprolint {
namespace {

using nlohmann::json;

void AppendSignature(const GuiComponent& c, std::string& out) {
  out += ComponentTypeName(c.type);
  out += '(' + std::to_string(c.bounds.width) + 'x' + std::to_string(c.bounds.height) + ')';
  if (c.children.empty()) return;
  out += '[';
  for (std::size_t i = 0; i < c.children.size(); ++i) {
    if (i) out += ',';
    AppendSignature(c.children[i], out);
  }
  out += ']';
}

bool SameEvent(EventKind a, EventKind b) {
  auto norm = [](EventKind k) { return k == EventKind::kTapMenu ? EventKind::kTap : k; };
  return norm(a) == norm(b);
}

std::string EdgeInputClass(const Event& event) {
  return event.kind == EventKind::kType ? InputClass(event.input.value_or("")) : "";
}

struct Action {
  EventKind kind;
  std::string component_id;
};

std::vector<Action> ActionsFor(const AppModel& model, const ScreenInstance& screen) {
  std::vector<Action> actions;
  for (const GuiComponent* c : screen.Components()) {
    if (!c->flags.enabled) continue;
    if (c->flags.tappable || c->flags.checkable || c->flags.pickable) {
      actions.push_back({EventKind::kTap, c->id});
    }
    if (c->flags.long_tappable) actions.push_back({EventKind::kLongTap, c->id});
    if (c->flags.typeable) actions.push_back({EventKind::kType, c->id});
  }
  bool explicit_back = false;
  for (const Transition& t : model.transitions()) {
    if (t.screen != screen.name || RequiresComponent(t.event)) continue;
    actions.push_back({t.event, ""});
    explicit_back = explicit_back || t.event == EventKind::kTapBack;
  }
  if (!explicit_back) actions.push_back({EventKind::kTapBack, ""});
  return actions;
}

}  // namespace

std::string Signature(const ScreenInstance& screen) {
  if (screen.name == kLauncherScreen) return "start";
  std::string out;
  AppendSignature(screen.root, out);
  return out;
}

Trace SystematicExplore(const AppModel& model, std::size_t budget) {
  Trace trace;
  if (budget == 0) return trace;
  DeviceSession session(model);
  std::uint64_t counter = 1;
  auto run = [&](EventKind kind, const std::string& component_id) {
    Event event{kind, std::nullopt};
    if (kind == EventKind::kType) event.input = std::to_string(counter++);
    ScreenInstance source = session.current();
    session.Execute(event, component_id);
    trace.push_back({std::move(source), std::move(event), component_id, session.current()});
  };
  run(EventKind::kOpenApp, "");
  std::set<std::string> visited = {Signature(session.current())};

  auto dfs = [&](auto& self) -> void {
    const Checkpoint checkpoint = session.Capture();
    const std::vector<Action> actions = ActionsFor(model, session.current());
    for (const Action& action : actions) {
      if (trace.size() >= budget) return;
      session.Restore(checkpoint);
      run(action.kind, action.component_id);
      if (visited.insert(Signature(session.current())).second) self(self);
    }
  };
  dfs(dfs);
  return trace;
}

ExecutionGraph::ExecutionGraph() {
  ScreenInstance start = LauncherScreen();
  vertices_.push_back({kStart, Signature(start), start, WireframeRef(RenderWireframe(start))});
}

std::optional<int> ExecutionGraph::FindVertex(const ScreenInstance& screen) const {
  const std::string sig = Signature(screen);
  for (const Vertex& v : vertices_) {
    if (v.signature == sig) return v.id;
  }
  return std::nullopt;
}

int ExecutionGraph::AddScreen(const ScreenInstance& screen) {
  if (auto found = FindVertex(screen)) return *found;
  int id = static_cast<int>(vertices_.size());
  vertices_.push_back({id, Signature(screen), screen, WireframeRef(RenderWireframe(screen))});
  return id;
}

const Edge& ExecutionGraph::AddInteraction(int source, int target, const Event& event,
                                           const std::string& component_id) {
  const std::string input_class = EdgeInputClass(event);
  for (const Edge& e : edges_) {
    if (e.source == source && SameEvent(e.event, event.kind) && e.component_id == component_id &&
        e.input_class == input_class) {
      return e;
    }
  }
  edges_.push_back(
      {source, target, event.kind, component_id, input_class, event.input, next_exec_order_++});
  return edges_.back();
}

void ExecutionGraph::MergeTrace(const Trace& trace) {
  for (const TraceStep& step : trace) {
    int source = AddScreen(step.source);
    int target = AddScreen(step.target);
    AddInteraction(source, target, step.event, step.component_id);
  }
}

std::vector<const Edge*> ExecutionGraph::FindEdges(int source, EventKind event,
                                                   std::string_view component_id) const {
  std::vector<const Edge*> out;
  for (const Edge& e : edges_) {
    if (e.source == source && SameEvent(e.event, event) && e.component_id == component_id) {
      out.push_back(&e);
    }
  }
  return out;
}

std::vector<const Edge*> ExecutionGraph::OutEdges(int vertex) const {
  std::vector<const Edge*> out;
  for (const Edge& e : edges_) {
    if (e.source == vertex) out.push_back(&e);
  }
  std::sort(out.begin(), out.end(),
            [](const Edge* a, const Edge* b) { return a->exec_order < b->exec_order; });
  return out;
}

std::vector<std::pair<int, std::size_t>> ExecutionGraph::Neighborhood(int from,
                                                                      std::size_t depth) const {
  constexpr auto kNone = std::numeric_limits<std::uint64_t>::max();
  const std::size_t n = vertices_.size();
  std::vector<std::size_t> dist(n, std::numeric_limits<std::size_t>::max());
  std::vector<std::uint64_t> via(n, kNone);
  std::vector<int> frontier = {from};
  dist.at(static_cast<std::size_t>(from)) = 0;
  via[static_cast<std::size_t>(from)] = 0;
  for (std::size_t d = 1; d <= depth && !frontier.empty(); ++d) {
    std::vector<int> next;
    for (int u : frontier) {
      for (const Edge* e : OutEdges(u)) {
        auto t = static_cast<std::size_t>(e->target);
        if (dist[t] < d) continue;
        if (dist[t] != d) {
          dist[t] = d;
          next.push_back(e->target);
        }
        via[t] = std::min(via[t], e->exec_order);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::pair<int, std::size_t>> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (dist[v] <= depth) out.emplace_back(static_cast<int>(v), dist[v]);
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    auto va = via[static_cast<std::size_t>(a.first)];
    auto vb = via[static_cast<std::size_t>(b.first)];
    if (va != vb) return va < vb;
    return a.first < b.first;
  });
  return out;
}

std::vector<Edge> ExecutionGraph::ShortestPath(int from, int to) const {
  const std::size_t n = vertices_.size();
  if (from < 0 || to < 0 || static_cast<std::size_t>(from) >= n ||
      static_cast<std::size_t>(to) >= n) {
    throw NoPathError("unknown vertex");
  }
  if (from == to) return {};
  // Distances to `to` over reversed edges.
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> remaining(n, kInf);
  remaining[static_cast<std::size_t>(to)] = 0;
  std::deque<int> queue = {to};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const Edge& e : edges_) {
      if (e.target != v) continue;
      auto s = static_cast<std::size_t>(e.source);
      if (remaining[s] == kInf) {
        remaining[s] = remaining[static_cast<std::size_t>(v)] + 1;
        queue.push_back(e.source);
      }
    }
  }
  if (remaining[static_cast<std::size_t>(from)] == kInf) {
    throw NoPathError("no path from vertex " + std::to_string(from) + " to vertex " +
                      std::to_string(to));
  }
  std::vector<Edge> path;
  int at = from;
  while (at != to) {
    const std::size_t want = remaining[static_cast<std::size_t>(at)] - 1;
    for (const Edge* e : OutEdges(at)) {
      if (remaining[static_cast<std::size_t>(e->target)] == want) {
        path.push_back(*e);
        at = e->target;
        break;
      }
    }
  }
  return path;
}

json ExecutionGraph::ToJson() const {
  json vertices = json::array();
  for (const Vertex& v : vertices_) {
    vertices.push_back({{"id", v.id},
                        {"signature", v.signature},
                        {"screen", ScreenToJson(v.screen)},
                        {"wireframe", v.wireframe_ref}});
  }
  json edges = json::array();
  for (const Edge& e : edges_) {
    json doc = {{"source", e.source},
                {"target", e.target},
                {"event", EventKindName(e.event)},
                {"componentId", e.component_id},
                {"inputClass", e.input_class},
                {"execOrder", e.exec_order}};
    doc["input"] = e.input ? json(*e.input) : json(nullptr);
    edges.push_back(std::move(doc));
  }
  return {{"version", kVersion},
          {"vertices", std::move(vertices)},
          {"edges", std::move(edges)},
          {"nextExecOrder", next_exec_order_}};
}

ExecutionGraph ExecutionGraph::FromJson(const json& doc) {
  try {
    if (doc.at("version").get<int>() != kVersion) {
      throw ModelError("graph cache: unsupported version " + doc.at("version").dump());
    }
    ExecutionGraph g;
    g.vertices_.clear();
    for (const json& v : doc.at("vertices")) {
      Vertex vertex;
      vertex.id = v.at("id").get<int>();
      vertex.signature = v.at("signature").get<std::string>();
      vertex.screen = ScreenFromJson(v.at("screen"));
      vertex.wireframe_ref = v.at("wireframe").get<std::string>();
      if (vertex.id != static_cast<int>(g.vertices_.size()) ||
          vertex.signature != Signature(vertex.screen)) {
        throw ModelError("graph cache: inconsistent vertex " + std::to_string(vertex.id));
      }
      g.vertices_.push_back(std::move(vertex));
    }
    if (g.vertices_.empty() || g.vertices_[0].signature != "start") {
      throw ModelError("graph cache: missing start vertex");
    }
    for (const json& e : doc.at("edges")) {
      Edge edge;
      edge.source = e.at("source").get<int>();
      edge.target = e.at("target").get<int>();
      auto kind = ParseEventKind(e.at("event").get<std::string>());
      if (!kind) throw ModelError("graph cache: unknown event");
      edge.event = *kind;
      edge.component_id = e.at("componentId").get<std::string>();
      edge.input_class = e.at("inputClass").get<std::string>();
      if (!e.at("input").is_null()) edge.input = e.at("input").get<std::string>();
      edge.exec_order = e.at("execOrder").get<std::uint64_t>();
      auto n = static_cast<int>(g.vertices_.size());
      if (edge.source < 0 || edge.source >= n || edge.target < 0 || edge.target >= n) {
        throw ModelError("graph cache: edge endpoint out of range");
      }
      g.edges_.push_back(std::move(edge));
    }
    g.next_exec_order_ = doc.at("nextExecOrder").get<std::uint64_t>();
    return g;
  } catch (const json::exception& e) {
    throw ModelError(std::string("graph cache: ") + e.what());
  }
}

std::string ExecutionGraph::Serialize() const { return ToJson().dump(1) + "\n"; }

}  // namespace reprolint
